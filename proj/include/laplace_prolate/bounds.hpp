#pragma once

#include <optional>
#include <string>

#include "laplace_prolate/eigensystem.hpp"

namespace laplace_prolate {

/// Outcome of checking one published inequality. `satisfied` is meaningful
/// only when `applicable`.
struct BoundReport {
  std::string name;
  std::optional<int> n;
  double lhs = 0.0;
  double rhs = 0.0;
  bool applicable = false;
  bool satisfied = false;
};

/// 2^{-alpha} pi^{3/2} / sqrt(e (alpha + 1)).
double k_alpha(double alpha);

/// Super-exponential upper bound on nu_n, defined for n > e c / 2 + 1:
///   e^c k_alpha / L * exp(-(n - 1) L),  L = log((2n - 1) / (e c)).
std::optional<double> nu_upper_bound(const ProblemParams& params, int n);

/// Natural log of the same bound (finite where the bound underflows).
std::optional<double> log_nu_upper_bound(const ProblemParams& params, int n);

/// K_{alpha,gamma} e^{gamma^2 c} with
/// K = sqrt(2/pi) (1 - gamma)^2 (1 - gamma^2)^{alpha - 1/2} / (alpha + 1).
/// Requires alpha > -1/2 and 0 < gamma < 1.
double nu0_lower_bound(const ProblemParams& params, double gamma);

struct BestLowerBound {
  double gamma_star = 0.0;
  double bound = 0.0;
};

/// Maximizes nu0_lower_bound over gamma in (0.01, 0.99) with Brent's method.
BestLowerBound nu0_lower_bound_best(const ProblemParams& params);

/// (C_alpha / nu_n) e^c / (k + 1/2) (e c / (2k + 1))^k with C_alpha = k_alpha.
double coeff_decay_bound(const ProblemParams& params, double nu_n, int k);

/// Natural log of coeff_decay_bound, taking log nu_n.
double log_coeff_decay_bound(const ProblemParams& params, double log_nu_n, int k);

/// 3 sqrt(alpha + 1) chi_n^{(alpha + 1) / 2} when alpha > -1/2,
/// chi_n >= 6 (alpha + 1) / (alpha + 3) and q = c^2 / chi_n is at most
/// 1/2 + alpha (alpha <= 0) or min(1, 1/2 + alpha) (alpha > 0).
std::optional<double> phi_sup_bound(double chi_n, const ProblemParams& params);

/// max over 401 equispaced t of (1 - t^2) (1 - t^2)^alpha phi_n(t)^2 against 1 + alpha.
/// Applicable when q = c^2 / chi_n >= 0 and, for alpha > 0, q <= alpha / 2.
BoundReport local_estimate_check(const EigenPair& pair, const ProblemParams& params);

struct ApproxErrorBounds {
  double l2_bound = 0.0;
  double sup_bound_shape = 0.0;  // unknown alpha-dependent constant set to 1
};

/// Error bounds for S_n(g), g = L f, given ||f||. Requires n >= e c / 2,
/// (2n + 1) > e c and alpha > -1/2.
std::optional<ApproxErrorBounds> approx_error_bounds(const ProblemParams& params, int n,
                                                     double f_norm);

}  // namespace laplace_prolate
