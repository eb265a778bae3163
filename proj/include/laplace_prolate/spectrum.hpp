#pragma once

#include <vector>

#include "laplace_prolate/eigensystem.hpp"
#include "laplace_prolate/log_value.hpp"
#include "laplace_prolate/quadrature.hpp"
#include "laplace_prolate/specfun.hpp"

namespace laplace_prolate {

/// Eigenvalues nu_n of the weighted finite Laplace operator together with the
/// eigenpairs they belong to. `nu[n]` may underflow to 0 for very deep n;
/// `log_nu[n]` stays exact.
struct Spectrum {
  ProblemParams params{1.0, 0.0};
  std::vector<EigenPair> pairs;
  std::vector<double> nu;
  std::vector<double> log_nu;

  int size() const { return static_cast<int>(pairs.size()); }
};

enum class NuMethod {
  galerkin,        // row of the exponential kernel's Gram matrix in the Jacobi basis
  boundary_ratio,  // ratio of the Bessel extension to the Jacobi series at x = 1
};

/// Spectrum for n = 0..n_max.
Spectrum build_spectrum(const ProblemParams& params, int n_max,
                        NuMethod method = NuMethod::galerkin);

/// Smallest N whose upper bound on nu_N is below 1e-30 nu_0, capped at 120.
int default_spectrum_size(const ProblemParams& params);

struct NuEstimate {
  LogValue nu;
  double condition = 1.0;  // sum |terms| / |sum| of the worse of the two sums
};

/// nu_n from matching the Bessel-series extension of phi_n with its Jacobi
/// series at x = 1. Every k-term is formed in log space. Loses relative
/// accuracy like `condition` * eps, so it is reliable only while nu_n is not
/// far below nu_0. Throws ConditioningError when sum_k d_k p_k(1) is below
/// 1e-250 of the largest numerator term.
NuEstimate eigenvalue_nu_detail(const EigenPair& pair, const ProblemParams& params);
double eigenvalue_nu(const EigenPair& pair, const ProblemParams& params);

/// nu_n = (sum_j M_pj d_j) / d_p with p the dominant coefficient and
///   M_kj = <L p_j, p_k> = sum_m c^m / m! <x^m, p_k> <x^m, p_j>,
/// every term positive except for the signs of d_j. Stays accurate to a few
/// ulps times the truncation error of d far below nu_0.
LogValue eigenvalue_nu_galerkin(const EigenPair& pair, const ProblemParams& params);

/// Same with a moment table reused across pairs; the table must cover
/// galerkin_moment_order(pair.trunc_order, c).
LogValue eigenvalue_nu_galerkin(const EigenPair& pair, const ProblemParams& params,
                                const JacobiMoments& moments);
int galerkin_moment_order(int max_degree, double c);

/// phi_n(x) = sum_k d_k p_k(x), |x| <= 1.
double eval_phi(const EigenPair& pair, double x);

/// phi_n(x) for real x through its Bessel-series extension, scaled by 1 / nu_n.
/// Throws RangeError for |x| > 50 / c.
double eval_phi_extended(const EigenPair& pair, double nu_n, const ProblemParams& params,
                         double x);

/// (L f)(x) by the quadrature rule: sum_i w_i e^{c x x_i} f(x_i).
double apply_operator(const ProblemParams& params, const RealFunction& f, const QuadRule& rule,
                      double x);

/// Mercer trace B(1/2, alpha + 1) 1F1(1/2; alpha + 3/2; c).
double trace_exact(const ProblemParams& params);

struct NystromSpectrum {
  int m = 0;
  std::vector<double> eigenvalues;  // decreasing
};

/// Eigenvalues of sqrt(w_i) e^{c x_i x_j} sqrt(w_j) on the m-point Gauss-Jacobi rule.
NystromSpectrum nystrom_spectrum(const ProblemParams& params, int m);

}  // namespace laplace_prolate
