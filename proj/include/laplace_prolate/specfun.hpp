#pragma once

#include <vector>

#include "laplace_prolate/log_value.hpp"

namespace laplace_prolate {

/// Symmetric Jacobi parameter alpha of the weight (1 - x^2)^alpha.
class JacobiParams {
 public:
  explicit JacobiParams(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), x, y > 0.
LogValue beta(double x, double y);

/// Modified Bessel function of the first kind I_nu(x), x > 0, nu > -1, from
/// the ascending series. Intended for the moderate arguments met here
/// (x below roughly 100).
LogValue bessel_i(double nu, double x);

/// I_nu(x) / x^shift, still valid (and finite) as x -> 0 when shift <= nu.
LogValue bessel_i_scaled(double nu, double x, double shift);

/// Confluent hypergeometric 1F1(a; b; z) for b > a > 0 and |z| <= 100.
/// Negative z goes through Kummer's transformation so that the summed series
/// always has positive terms.
double kummer_1f1(double a, double b, double z);

/// Squared norm h_k of the Jacobi polynomial P_k^{(alpha,alpha)} in L^2((1-x^2)^alpha).
LogValue jacobi_norm(double alpha, int k);

/// Off-diagonal entry a_k of the orthonormal recurrence
///   x p_k = a_{k+1} p_{k+1} + a_k p_{k-1},
/// i.e. a_k^2 = k (k + 2 alpha) / ((2k + 2 alpha + 1)(2k + 2 alpha - 1)); a_0 = 0.
double jacobi_recurrence_coeff(double alpha, int k);

/// Orthonormal Jacobi values p_0(x) .. p_kmax(x) for |x| <= 1.
std::vector<double> jacobi_orthonormal_values(double alpha, int kmax, double x);

/// Precomputed orthonormal three-term recurrence up to degree kmax, for
/// evaluating many points. `evaluate` does no domain check on x.
class JacobiRecurrence {
 public:
  JacobiRecurrence(double alpha, int kmax);

  int kmax() const { return kmax_; }
  double alpha() const { return alpha_; }
  void evaluate(double x, double* out) const;

 private:
  double alpha_;
  int kmax_;
  double p0_;
  std::vector<double> a_;  // a_[k] = a_k, k = 0..kmax
};

/// p_k(1) = Gamma(k + alpha + 1) / (Gamma(alpha + 1) k! sqrt(h_k)).
LogValue jacobi_value_at_one(double alpha, int k);

/// log |integral_{-1}^{1} x^m p_k(x) (1-x^2)^alpha dx| for m, k <= mmax; entries
/// with k > m or k != m (mod 2) are -inf. Computed by the positive recurrence
///   mu_{m+1,k} = a_{k+1} mu_{m,k+1} + a_k mu_{m,k-1}.
class JacobiMoments {
 public:
  JacobiMoments(double alpha, int mmax);

  int mmax() const { return mmax_; }
  double log_moment(int m, int k) const {
    return log_mu_[static_cast<std::size_t>(m) * (mmax_ + 1) + k];
  }

 private:
  int mmax_;
  std::vector<double> log_mu_;
};

}  // namespace laplace_prolate
