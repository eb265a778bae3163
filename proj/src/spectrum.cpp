#include "laplace_prolate/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "laplace_prolate/bounds.hpp"
#include "laplace_prolate/errors.hpp"
#include "laplace_prolate/kernels.hpp"

namespace laplace_prolate {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr int kSpectrumCap = 120;

int pair_max_degree(const EigenPair& pair) {
  return pair.coeffs.empty() ? 0 : pair.degree(static_cast<int>(pair.coeffs.size()) - 1);
}

// Coefficient of d_k in the Bessel-series extension of phi_n at z = c x > 0,
// before the division by nu_n:
//   2^{2k+3a+3/2} Gamma(k+a+3/2) / (sqrt(h_k) k!) B(k+a+1, k+a+1) I_{k+a+1/2}(z) / z^{a+1/2}.
LogValue extension_factor(double alpha, int k, double z) {
  const double kd = k;
  const double log_f = (2.0 * kd + 3.0 * alpha + 1.5) * kLn2 + log_gamma(kd + alpha + 1.5) -
                       0.5 * jacobi_norm(alpha, k).log_abs - log_gamma(kd + 1.0);
  return LogValue::from_log(log_f) * beta(kd + alpha + 1.0, kd + alpha + 1.0) *
         bessel_i_scaled(kd + alpha + 0.5, z, alpha + 0.5);
}

LogValue extension_sum(const EigenPair& pair, double z, double* condition) {
  const double alpha = pair.params.alpha();
  std::vector<LogValue> terms;
  terms.reserve(pair.coeffs.size());
  for (std::size_t j = 0; j < pair.coeffs.size(); ++j) {
    terms.push_back(LogValue::from_double(pair.coeffs[j]) *
                    extension_factor(alpha, pair.degree(static_cast<int>(j)), z));
  }
  return log_sum(terms, condition);
}

}  // namespace

NuEstimate eigenvalue_nu_detail(const EigenPair& pair, const ProblemParams& params) {
  if (!(pair.params == params)) throw DomainError("eigenvalue_nu: pair built for other params");
  const double alpha = params.alpha();
  double cond_num = 1.0, cond_den = 1.0;
  const LogValue num = extension_sum(pair, params.c(), &cond_num);

  std::vector<LogValue> den_terms;
  double num_scale = -std::numeric_limits<double>::infinity();
  den_terms.reserve(pair.coeffs.size());
  for (std::size_t j = 0; j < pair.coeffs.size(); ++j) {
    const int k = pair.degree(static_cast<int>(j));
    den_terms.push_back(LogValue::from_double(pair.coeffs[j]) * jacobi_value_at_one(alpha, k));
    if (pair.coeffs[j] != 0.0) {
      const LogValue t = LogValue::from_double(pair.coeffs[j]) *
                         extension_factor(alpha, k, params.c());
      num_scale = std::max(num_scale, t.log_abs);
    }
  }
  const LogValue den = log_sum(den_terms, &cond_den);
  if (den.is_zero() || den.log_abs < num_scale + std::log(1e-250)) {
    throw ConditioningError("eigenvalue_nu: phi_n(1) lost to cancellation for n = " +
                            std::to_string(pair.n));
  }
  return {num / den, std::max(cond_num, cond_den)};
}

double eigenvalue_nu(const EigenPair& pair, const ProblemParams& params) {
  return eigenvalue_nu_detail(pair, params).nu.value();
}

int galerkin_moment_order(int max_degree, double c) {
  return max_degree + 2 * static_cast<int>(std::ceil(c)) + 60;
}

LogValue eigenvalue_nu_galerkin(const EigenPair& pair, const ProblemParams& params) {
  const JacobiMoments moments(params.alpha(),
                              galerkin_moment_order(pair_max_degree(pair), params.c()));
  return eigenvalue_nu_galerkin(pair, params, moments);
}

LogValue eigenvalue_nu_galerkin(const EigenPair& pair, const ProblemParams& params,
                                const JacobiMoments& moments) {
  if (!(pair.params == params)) {
    throw DomainError("eigenvalue_nu_galerkin: pair built for other params");
  }
  const int mmax = moments.mmax();
  if (mmax < galerkin_moment_order(pair_max_degree(pair), params.c())) {
    throw DomainError("eigenvalue_nu_galerkin: moment table too small");
  }
  std::size_t p = 0;
  for (std::size_t j = 1; j < pair.coeffs.size(); ++j) {
    if (std::fabs(pair.coeffs[j]) > std::fabs(pair.coeffs[p])) p = j;
  }
  const int kp = pair.degree(static_cast<int>(p));

  const double log_c = std::log(params.c());
  std::vector<double> log_taylor(static_cast<std::size_t>(mmax) + 1);
  for (int m = 0; m <= mmax; ++m) log_taylor[m] = m * log_c - log_gamma(m + 1.0);

  std::vector<LogValue> terms;
  terms.reserve(pair.coeffs.size());
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(mmax));
  for (std::size_t j = 0; j < pair.coeffs.size(); ++j) {
    if (pair.coeffs[j] == 0.0) continue;
    const int k = pair.degree(static_cast<int>(j));
    logs.clear();
    double top = -std::numeric_limits<double>::infinity();
    for (int m = std::max(k, kp); m <= mmax; m += 2) {
      const double t = log_taylor[m] + moments.log_moment(m, kp) + moments.log_moment(m, k);
      logs.push_back(t);
      top = std::max(top, t);
    }
    double s = 0.0;
    for (double t : logs) s += std::exp(t - top);
    const double log_m = top + std::log(s);
    terms.push_back(LogValue::from_log(log_m) * LogValue::from_double(pair.coeffs[j]));
  }
  return log_sum(terms) / LogValue::from_double(pair.coeffs[p]);
}

Spectrum build_spectrum(const ProblemParams& params, int n_max, NuMethod method) {
  Spectrum s;
  s.params = params;
  s.pairs = compute_eigenpairs(params, n_max);
  std::vector<LogValue> nu;
  if (method == NuMethod::galerkin) {
    nu = kernels::omp::nu_galerkin(s.pairs, params);
  } else {
    nu.reserve(s.pairs.size());
    for (const auto& pair : s.pairs) nu.push_back(eigenvalue_nu_detail(pair, params).nu);
  }
  s.nu.resize(nu.size());
  s.log_nu.resize(nu.size());
  for (std::size_t n = 0; n < nu.size(); ++n) {
    if (nu[n].sign <= 0) {
      throw NumericError("build_spectrum: non-positive eigenvalue at n = " + std::to_string(n));
    }
    s.nu[n] = nu[n].value();
    s.log_nu[n] = nu[n].log_abs;
  }
  return s;
}

int default_spectrum_size(const ProblemParams& params) {
  const double log_nu0 = build_spectrum(params, 0).log_nu[0];
  const double target = log_nu0 + std::log(1e-30);
  for (int n = 0; n < kSpectrumCap; ++n) {
    const auto lb = log_nu_upper_bound(params, n);
    if (lb && *lb < target) return n;
  }
  return kSpectrumCap;
}

double eval_phi(const EigenPair& pair, double x) {
  if (!(std::fabs(x) <= 1.0)) throw DomainError("eval_phi: |x| must be <= 1");
  const JacobiRecurrence rec(pair.params.alpha(), pair_max_degree(pair));
  std::vector<double> p(static_cast<std::size_t>(rec.kmax()) + 1);
  rec.evaluate(x, p.data());
  double s = 0.0;
  for (std::size_t j = 0; j < pair.coeffs.size(); ++j) {
    s += pair.coeffs[j] * p[pair.degree(static_cast<int>(j))];
  }
  return s;
}

double eval_phi_extended(const EigenPair& pair, double nu_n, const ProblemParams& params,
                         double x) {
  if (!(pair.params == params)) {
    throw DomainError("eval_phi_extended: pair built for other params");
  }
  if (!(nu_n > 0.0)) throw DomainError("eval_phi_extended: nu_n must be > 0");
  if (!(std::fabs(x) <= 50.0 / params.c())) {
    throw RangeError("eval_phi_extended: |x| > 50 / c");
  }
  if (x == 0.0) return eval_phi(pair, 0.0);
  const double sign = (x < 0.0 && pair.parity == Parity::odd) ? -1.0 : 1.0;
  const LogValue s = extension_sum(pair, params.c() * std::fabs(x), nullptr);
  return sign * (s / LogValue::from_double(nu_n)).value();
}

double apply_operator(const ProblemParams& params, const RealFunction& f, const QuadRule& rule,
                      double x) {
  const std::vector<double> f_at = sample_at_nodes(f, rule);
  const double xs[] = {x};
  return kernels::serial::apply_operator(params.c(), f_at, rule, xs)[0];
}

double trace_exact(const ProblemParams& params) {
  const double alpha = params.alpha();
  return beta(0.5, alpha + 1.0).value() * kummer_1f1(0.5, alpha + 1.5, params.c());
}

NystromSpectrum nystrom_spectrum(const ProblemParams& params, int m) {
  if (m < 40) throw DomainError("nystrom_spectrum: m must be >= 40");
  const QuadRule rule = gauss_jacobi_rule(params.alpha(), m);
  const Eigen::MatrixXd a = kernels::omp::nystrom_matrix(params.c(), rule);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("nystrom_spectrum: eigensolve failed");
  NystromSpectrum out;
  out.m = m;
  out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + m);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

}  // namespace laplace_prolate
