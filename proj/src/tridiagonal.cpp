#include "laplace_prolate/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "laplace_prolate/errors.hpp"

namespace laplace_prolate {

TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diag,
                                             std::span<const double> offdiag,
                                             bool want_vectors) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) throw DomainError("symmetric_tridiagonal_eigen: empty matrix");
  if (static_cast<int>(offdiag.size()) != n - 1) {
    throw DomainError("symmetric_tridiagonal_eigen: offdiag must have size - 1 entries");
  }

  std::vector<double> d(diag.begin(), diag.end());
  // e[i] couples rows i and i+1; e[n-1] is scratch.
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());

  std::vector<double> z;
  if (want_vectors) {
    z.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i) * n + i] = 1.0;
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    for (;;) {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) {
        throw NumericError("symmetric_tridiagonal_eigen: QL iteration did not converge");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            double* row = &z[static_cast<std::size_t>(k) * n];
            f = row[i + 1];
            row[i + 1] = s * row[i] + c * f;
            row[i] = c * row[i] - s * f;
          }
        }
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  TridiagonalEigen out;
  out.size = n;
  out.values.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.values[j] = d[order[j]];
  if (want_vectors) {
    out.vectors.resize(z.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out.vectors[static_cast<std::size_t>(i) * n + j] = z[static_cast<std::size_t>(i) * n + order[j]];
      }
    }
  }
  return out;
}

}  // namespace laplace_prolate
