#include "hoopsnet/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hoopsnet/error.hpp"

namespace hoopsnet {

double normal_sf(double z) {
  // 1 - Phi(z) = erfc(z / sqrt(2)) / 2
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;

// Lower regularized gamma P(a,x) by series, valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double term = sum;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw NumericalError("regularized gamma series did not converge (a=" + std::to_string(a) +
                       ", x=" + std::to_string(x) + ")");
}

// Upper regularized gamma Q(a,x) by Lentz continued fraction, for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw NumericalError("regularized gamma continued fraction did not converge (a=" +
                       std::to_string(a) + ", x=" + std::to_string(x) + ")");
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw ValidationError("regularized_gamma_q: a must be positive");
  if (x < 0.0) throw ValidationError("regularized_gamma_q: x must be >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_sf(double x, int df) {
  if (df < 1) throw ValidationError("chi_square_sf: df must be >= 1");
  if (x < 0.0) throw ValidationError("chi_square_sf: x must be >= 0");
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

}  // namespace hoopsnet
