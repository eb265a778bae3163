#include "laplace_prolate/bounds.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <numbers>

#include "laplace_prolate/errors.hpp"
#include "laplace_prolate/spectrum.hpp"

namespace laplace_prolate {

namespace {

void require_half(const ProblemParams& params, const char* what) {
  if (!(params.alpha() > -0.5)) {
    throw DomainError(std::string(what) + ": requires alpha > -1/2");
  }
}

}  // namespace

double k_alpha(double alpha) {
  if (!(alpha > -1.0)) throw DomainError("k_alpha: alpha must be > -1");
  return std::pow(2.0, -alpha) * std::pow(std::numbers::pi, 1.5) /
         std::sqrt(std::numbers::e * (alpha + 1.0));
}

std::optional<double> log_nu_upper_bound(const ProblemParams& params, int n) {
  const double ec = std::numbers::e * params.c();
  if (!(n > ec / 2.0 + 1.0)) return std::nullopt;
  const double l = std::log((2.0 * n - 1.0) / ec);
  return params.c() + std::log(k_alpha(params.alpha())) - std::log(l) - (n - 1.0) * l;
}

std::optional<double> nu_upper_bound(const ProblemParams& params, int n) {
  const auto lg = log_nu_upper_bound(params, n);
  if (!lg) return std::nullopt;
  return std::exp(*lg);
}

double nu0_lower_bound(const ProblemParams& params, double gamma) {
  require_half(params, "nu0_lower_bound");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("nu0_lower_bound: gamma must lie in (0, 1)");
  }
  const double alpha = params.alpha();
  const double k = std::sqrt(2.0 / std::numbers::pi) * (1.0 - gamma) * (1.0 - gamma) *
                   std::pow(1.0 - gamma * gamma, alpha - 0.5) / (alpha + 1.0);
  return k * std::exp(gamma * gamma * params.c());
}

BestLowerBound nu0_lower_bound_best(const ProblemParams& params) {
  require_half(params, "nu0_lower_bound_best");
  // brent_find_minima with 27 bits of precision resolves gamma to about 1e-8.
  const auto neg = [&](double g) { return -std::log(nu0_lower_bound(params, g)); };
  const auto [g, v] = boost::math::tools::brent_find_minima(neg, 0.01, 0.99, 27);
  return {g, std::exp(-v)};
}

double log_coeff_decay_bound(const ProblemParams& params, double log_nu_n, int k) {
  if (k < 0) throw DomainError("coeff_decay_bound: k must be >= 0");
  const double c = params.c();
  const double kd = k;
  return std::log(k_alpha(params.alpha())) - log_nu_n + c - std::log(kd + 0.5) +
         kd * std::log(std::numbers::e * c / (2.0 * kd + 1.0));
}

double coeff_decay_bound(const ProblemParams& params, double nu_n, int k) {
  if (!(nu_n > 0.0)) throw DomainError("coeff_decay_bound: nu_n must be > 0");
  return std::exp(log_coeff_decay_bound(params, std::log(nu_n), k));
}

std::optional<double> phi_sup_bound(double chi_n, const ProblemParams& params) {
  const double alpha = params.alpha();
  if (!(alpha > -0.5)) return std::nullopt;
  if (!(chi_n >= 6.0 * (alpha + 1.0) / (alpha + 3.0))) return std::nullopt;
  const double q = params.c() * params.c() / chi_n;
  const double q_max = alpha <= 0.0 ? 0.5 + alpha : std::min(1.0, 0.5 + alpha);
  if (!(q <= q_max)) return std::nullopt;
  return 3.0 * std::sqrt(alpha + 1.0) * std::pow(chi_n, (alpha + 1.0) / 2.0);
}

BoundReport local_estimate_check(const EigenPair& pair, const ProblemParams& params) {
  BoundReport r;
  r.name = "local_estimate";
  r.n = pair.n;
  const double alpha = params.alpha();
  r.rhs = 1.0 + alpha;
  const double q = params.c() * params.c() / pair.chi;
  r.applicable = pair.chi > 0.0 && q >= 0.0 && (alpha <= 0.0 || q <= alpha / 2.0);

  constexpr int kPoints = 401;
  double lhs = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double t = -1.0 + 2.0 * i / (kPoints - 1.0);
    const double s = 1.0 - t * t;
    if (s <= 0.0) continue;  // (1 - t^2)^{1 + alpha} vanishes at the endpoints
    const double phi = eval_phi(pair, t);
    lhs = std::max(lhs, std::pow(s, 1.0 + alpha) * phi * phi);
  }
  r.lhs = lhs;
  r.satisfied = r.applicable && lhs <= r.rhs;
  return r;
}

std::optional<ApproxErrorBounds> approx_error_bounds(const ProblemParams& params, int n,
                                                     double f_norm) {
  const double ec = std::numbers::e * params.c();
  const double alpha = params.alpha();
  if (!(alpha > -0.5) || !(n >= ec / 2.0) || !(2.0 * n + 1.0 > ec)) return std::nullopt;
  const double l = std::log((2.0 * n + 1.0) / ec);
  const double shape = std::exp(params.c() - n * l) / l * f_norm;
  ApproxErrorBounds b;
  b.l2_bound = k_alpha(alpha) * shape;
  b.sup_bound_shape =
      std::pow((n + 1.0) * (n + 2.0 * alpha + 2.0), (alpha + 1.0) / 2.0) * shape;
  return b;
}

}  // namespace laplace_prolate
