#pragma once

#include <span>
#include <vector>

namespace laplace_prolate {

/// Eigen-decomposition of a real symmetric tridiagonal matrix.
/// Eigenvalues ascending; eigenvector j is the column
/// vectors[i * size + j], i = 0..size-1 (empty when not requested).
struct TridiagonalEigen {
  int size = 0;
  std::vector<double> values;
  std::vector<double> vectors;

  double vector_entry(int i, int j) const {
    return vectors[static_cast<std::size_t>(i) * size + j];
  }
};

/// Implicit-shift QL iteration (Wilkinson shifts) on the matrix with
/// diagonal `diag` and sub/super-diagonal `offdiag` (size - 1 entries).
/// Throws NumericError if an eigenvalue needs more than 60 sweeps.
TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diag,
                                             std::span<const double> offdiag,
                                             bool want_vectors);

}  // namespace laplace_prolate
