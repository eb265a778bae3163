#pragma once

#include <vector>

namespace laplace_prolate {

/// The pair (c, alpha) defining the weighted finite Laplace operator
///   (L f)(x) = integral_{-1}^{1} e^{c x y} f(y) (1 - y^2)^alpha dy.
class ProblemParams {
 public:
  ProblemParams(double c, double alpha);

  double c() const { return c_; }
  double alpha() const { return alpha_; }

  friend bool operator==(const ProblemParams&, const ProblemParams&) = default;

 private:
  double c_;
  double alpha_;
};

enum class Parity { even = 0, odd = 1 };

inline int parity_offset(Parity p) { return static_cast<int>(p); }
inline Parity parity_of(int n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }

/// One parity block of the commuting Sturm-Liouville operator written in the
/// orthonormal Jacobi basis. Row j stands for degree k = 2 j + parity.
struct TridiagonalSystem {
  Parity parity = Parity::even;
  int size = 0;
  std::vector<double> diag;
  std::vector<double> offdiag;  // size - 1 entries, coupling k and k + 2

  int degree(int j) const { return 2 * j + parity_offset(parity); }
};

/// Eigenpair of the Sturm-Liouville operator: chi_n and the Jacobi coefficients
/// d_k of phi_n, stored for k = parity, parity + 2, ..., trunc_order.
struct EigenPair {
  ProblemParams params{1.0, 0.0};
  int n = 0;
  double chi = 0.0;
  Parity parity = Parity::even;
  std::vector<double> coeffs;  // coeffs[j] = d_{2j + parity}
  int trunc_order = 0;

  int degree(int j) const { return 2 * j + parity_offset(parity); }
};

struct SturmLiouvilleMode {
  double chi = 0.0;
  std::vector<double> eigvec;
};

/// Diagonal k(k + 2a + 1) - c^2 <x^2 p_k, p_k> and coupling -c^2 <x^2 p_k, p_{k+2}>
/// for the requested parity; `size` rows.
TridiagonalSystem build_tridiagonal(const ProblemParams& params, Parity parity, int size);

/// The `count` algebraically smallest eigenpairs, ascending. Each vector is
/// orthonormal; entries outside its dominant band are recomputed from the
/// two-sided ratio recurrence of the matrix so that they keep relative
/// accuracy far below machine epsilon. Throws TruncationError when any
/// returned vector is not below 1e-14 over the last quarter of its entries.
std::vector<SturmLiouvilleMode> solve_lowest(const TridiagonalSystem& system, int count);

/// Truncation degree used for n = 0..n_max: max(2 n_max + 30, ceil(e c / 2) + 40).
/// compute_eigenpairs doubles it until the adequacy check passes.
int choose_truncation(const ProblemParams& params, int n_max);

/// Eigenpairs n = 0..n_max, ordered by chi and interleaving parities, with
/// phi_n(1) > 0.
std::vector<EigenPair> compute_eigenpairs(const ProblemParams& params, int n_max);

/// Same with an explicit initial truncation degree (still doubled on failure).
std::vector<EigenPair> compute_eigenpairs(const ProblemParams& params, int n_max,
                                          int initial_trunc_order);

/// Largest truncation degree tried before giving up.
inline constexpr int kMaxTruncationOrder = 4096;

}  // namespace laplace_prolate
