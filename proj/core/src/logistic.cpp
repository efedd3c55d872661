#include "hoopsnet/logistic.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "hoopsnet/error.hpp"
#include "hoopsnet/stats.hpp"

namespace hoopsnet {

namespace {

double bernoulli_log_lik(const Eigen::VectorXd& eta, const std::vector<int>& y) {
  // log L = sum y*eta - log(1 + exp(eta)), with the stable log1p form.
  double ll = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    const double e = eta[i];
    const double log1pexp = e > 0.0 ? e + std::log1p(std::exp(-e)) : std::log1p(std::exp(e));
    ll += y[static_cast<std::size_t>(i)] * e - log1pexp;
  }
  return ll;
}

}  // namespace

FitResult fit_logistic(const DesignMatrix& data, const FitOptions& opts) {
  const std::size_t n = data.n;
  const std::size_t k = data.k;
  if (n == 0 || data.labels.size() != n || data.values.size() != n * k) {
    throw ValidationError("fit_logistic: inconsistent design matrix shape");
  }
  std::size_t positives = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int y = data.labels[i];
    if (y != 0 && y != 1) throw ValidationError("fit_logistic: labels must be 0 or 1");
    positives += static_cast<std::size_t>(y);
  }
  if (positives == 0 || positives == n) {
    throw ValidationError("fit_logistic: labels contain a single class");
  }
  for (double v : data.values) {
    if (!std::isfinite(v)) throw ValidationError("fit_logistic: non-finite feature value");
  }

  FitResult result;
  if (n <= k) {
    result.warnings.push_back("rows (" + std::to_string(n) + ") do not exceed features (" +
                              std::to_string(k) + "); estimates are unreliable");
  }

  const std::size_t m = k + 1;  // intercept first
  Eigen::MatrixXd X(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    X(static_cast<Eigen::Index>(i), 0) = 1.0;
    for (std::size_t j = 0; j < k; ++j) {
      X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j + 1)) = data.at(i, j);
    }
  }

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
  Eigen::VectorXd eta = X * beta;
  double log_lik = bernoulli_log_lik(eta, data.labels);
  bool ridged = false;

  auto information = [&](const Eigen::VectorXd& linear) {
    Eigen::VectorXd w(linear.size());
    for (Eigen::Index i = 0; i < linear.size(); ++i) {
      const double p = 1.0 / (1.0 + std::exp(-linear[i]));
      w[i] = p * (1.0 - p);
    }
    Eigen::MatrixXd info = X.transpose() * w.asDiagonal() * X;
    if (opts.ridge > 0.0) {
      info.diagonal().array() += opts.ridge;
    }
    return info;
  };

  auto solve_spd = [&](Eigen::MatrixXd info, const Eigen::VectorXd& rhs) {
    Eigen::LLT<Eigen::MatrixXd> llt(info);
    if (llt.info() == Eigen::Success) {
      Eigen::VectorXd sol = llt.solve(rhs);
      if (sol.allFinite()) return sol;
    }
    // Singular information (collinear or constant column): fall back to a
    // small ridge and flag the result.
    const double jitter = opts.ridge > 0.0 ? opts.ridge : 1e-8;
    info.diagonal().array() += jitter;
    ridged = true;
    Eigen::LLT<Eigen::MatrixXd> retry(info);
    if (retry.info() != Eigen::Success) {
      throw NumericalError("fit_logistic: information matrix is not positive definite");
    }
    return Eigen::VectorXd(retry.solve(rhs));
  };

  int iterations = 0;
  bool converged = false;
  while (iterations < opts.max_iter) {
    ++iterations;
    Eigen::VectorXd mu(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < mu.size(); ++i) mu[i] = 1.0 / (1.0 + std::exp(-eta[i]));
    Eigen::VectorXd residual(static_cast<Eigen::Index>(n));
    double max_resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = data.labels[i] - mu[static_cast<Eigen::Index>(i)];
      residual[static_cast<Eigen::Index>(i)] = r;
      max_resid = std::max(max_resid, std::abs(r));
    }
    // Every fitted probability pinned to its label means the classes are
    // linearly separated and the MLE does not exist.
    if (max_resid < 1e-8) {
      throw SeparationError("fit_logistic: fitted probabilities reached their labels after " +
                            std::to_string(iterations) + " iterations; suspected separation");
    }
    Eigen::VectorXd grad = X.transpose() * residual;
    if (opts.ridge > 0.0) grad -= opts.ridge * beta;

    beta += solve_spd(information(eta), grad);

    if (beta.lpNorm<Eigen::Infinity>() > opts.separation_bound) {
      throw SeparationError(
          "fit_logistic: coefficient magnitude exceeded " + std::to_string(opts.separation_bound) +
          " after " + std::to_string(iterations) + " iterations; data is likely separable");
    }

    eta = X * beta;
    const double new_log_lik = bernoulli_log_lik(eta, data.labels);
    const double delta = std::abs(new_log_lik - log_lik);
    log_lik = new_log_lik;
    if (delta < opts.tol) {
      converged = true;
      break;
    }
  }

  // Standard errors from the inverse observed information at the optimum.
  Eigen::MatrixXd info = information(eta);
  Eigen::LLT<Eigen::MatrixXd> llt(info);
  Eigen::MatrixXd cov;
  if (llt.info() == Eigen::Success) {
    cov = llt.solve(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m),
                                              static_cast<Eigen::Index>(m)));
  }
  if (llt.info() != Eigen::Success || !cov.allFinite()) {
    const double jitter = opts.ridge > 0.0 ? opts.ridge : 1e-8;
    info.diagonal().array() += jitter;
    ridged = true;
    cov = info.llt().solve(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m),
                                                     static_cast<Eigen::Index>(m)));
  }

  result.coefficients.assign(beta.data(), beta.data() + m);
  result.std_errors.resize(m);
  result.z_values.resize(m);
  result.p_values.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double var = cov(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j));
    result.std_errors[j] = var > 0.0 ? std::sqrt(var) : std::numeric_limits<double>::quiet_NaN();
    result.z_values[j] = result.coefficients[j] / result.std_errors[j];
    result.p_values[j] = 2.0 * normal_sf(std::abs(result.z_values[j]));
  }

  // Intercept-only null model has the closed-form MLE p = mean(y).
  const double pbar = static_cast<double>(positives) / static_cast<double>(n);
  result.null_log_lik =
      static_cast<double>(positives) * std::log(pbar) +
      static_cast<double>(n - positives) * std::log(1.0 - pbar);

  result.log_lik = log_lik;
  result.pseudo_r2 = 1.0 - log_lik / result.null_log_lik;
  result.llr_stat = std::max(0.0, 2.0 * (log_lik - result.null_log_lik));
  result.llr_p = k > 0 ? chi_square_sf(result.llr_stat, static_cast<int>(k)) : 1.0;
  result.converged = converged;
  result.iterations = iterations;
  result.ridged = ridged;
  return result;
}

std::string fit_result_json(const FitResult& r) {
  nlohmann::json j;
  j["coefficients"] = r.coefficients;
  j["std_errors"] = r.std_errors;
  j["z_values"] = r.z_values;
  j["p_values"] = r.p_values;
  j["log_lik"] = r.log_lik;
  j["null_log_lik"] = r.null_log_lik;
  j["pseudo_r2"] = r.pseudo_r2;
  j["llr_stat"] = r.llr_stat;
  j["llr_p"] = r.llr_p;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["ridged"] = r.ridged;
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

}  // namespace hoopsnet
