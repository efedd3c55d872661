#pragma once

// Binary logistic regression by Newton-Raphson/IRLS with the full set of
// likelihood statistics: per-coefficient Wald tests, McFadden pseudo-R2, and
// the likelihood-ratio test against the intercept-only null.

#include <cstddef>
#include <string>
#include <vector>

namespace hoopsnet {

struct DesignMatrix {
  std::size_t n = 0;           // rows
  std::size_t k = 0;           // feature columns (intercept is implicit)
  std::vector<double> values;  // row-major n x k
  std::vector<int> labels;     // one 0/1 outcome per row

  double at(std::size_t i, std::size_t j) const { return values[i * k + j]; }
};

struct FitOptions {
  double tol = 1e-10;             // stop when |delta log-likelihood| < tol
  int max_iter = 100;
  double ridge = 0.0;             // opt-in penalty added to the information matrix
  double separation_bound = 30.0; // |coef| beyond this raises SeparationError
};

struct FitResult {
  std::vector<double> coefficients;  // intercept first, then the k features
  std::vector<double> std_errors;
  std::vector<double> z_values;
  std::vector<double> p_values;      // two-sided Wald
  double log_lik = 0.0;
  double null_log_lik = 0.0;
  double pseudo_r2 = 0.0;            // 1 - log_lik / null_log_lik
  double llr_stat = 0.0;             // 2 (log_lik - null_log_lik)
  double llr_p = 1.0;                // chi-square upper tail, df = k
  bool converged = false;
  int iterations = 0;
  bool ridged = false;               // information matrix needed a ridge
  std::vector<std::string> warnings;
};

// Throws ValidationError when labels are single-class or entries are not
// finite, SeparationError when coefficients run away (separable data).
// A singular information matrix falls back to the configured ridge (or a
// tiny default when ridge is 0) and sets the `ridged` flag.
FitResult fit_logistic(const DesignMatrix& data, const FitOptions& opts = {});

// All fields at full double precision.
std::string fit_result_json(const FitResult& result);

}  // namespace hoopsnet
