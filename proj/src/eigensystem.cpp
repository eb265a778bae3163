#include "laplace_prolate/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "laplace_prolate/errors.hpp"
#include "laplace_prolate/specfun.hpp"
#include "laplace_prolate/tridiagonal.hpp"

namespace laplace_prolate {

namespace {

// Entries below this fraction of the largest component are rebuilt from the
// ratio recurrence instead of taken from the QL eigenvector.
constexpr double kBandThreshold = 1e-6;
constexpr double kTailTolerance = 1e-14;

void refine_tails(const TridiagonalSystem& sys, double chi, std::vector<double>& v) {
  const int n = sys.size;
  int p = 0;
  for (int j = 1; j < n; ++j) {
    if (std::fabs(v[j]) > std::fabs(v[p])) p = j;
  }
  const double cutoff = kBandThreshold * std::fabs(v[p]);
  int lo = p, hi = p;
  for (int j = 0; j < n; ++j) {
    if (std::fabs(v[j]) >= cutoff) {
      lo = std::min(lo, j);
      hi = std::max(hi, j);
    }
  }

  // Below the band: rho_j = d_j / d_{j+1}, started at the j = 0 boundary row.
  if (lo > 0) {
    std::vector<double> rho(static_cast<std::size_t>(lo), 0.0);
    bool ok = true;
    for (int j = 0; j < lo && ok; ++j) {
      double den = sys.diag[j] - chi;
      if (j > 0) den += sys.offdiag[j - 1] * rho[j - 1];
      if (den == 0.0 || !std::isfinite(den)) ok = false;
      else rho[j] = -sys.offdiag[j] / den;
    }
    if (ok) {
      for (int j = lo - 1; j >= 0; --j) v[j] = rho[j] * v[j + 1];
    }
  }

  // Above the band: sigma_j = d_j / d_{j-1}, started at the truncation boundary.
  if (hi < n - 1) {
    std::vector<double> sigma(static_cast<std::size_t>(n) + 1, 0.0);
    bool ok = true;
    for (int j = n - 1; j > hi && ok; --j) {
      double den = sys.diag[j] - chi;
      if (j < n - 1) den += sys.offdiag[j] * sigma[j + 1];
      if (den == 0.0 || !std::isfinite(den)) ok = false;
      else sigma[j] = -sys.offdiag[j - 1] / den;
    }
    if (ok) {
      for (int j = hi + 1; j < n; ++j) v[j] = sigma[j] * v[j - 1];
    }
  }

  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : v) x *= inv;
}

}  // namespace

ProblemParams::ProblemParams(double c, double alpha) : c_(c), alpha_(alpha) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("c must be finite and > 0, got " + std::to_string(c));
  }
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be finite and > -1, got " + std::to_string(alpha));
  }
}

TridiagonalSystem build_tridiagonal(const ProblemParams& params, Parity parity, int size) {
  if (size < 2) throw DomainError("build_tridiagonal: size must be >= 2");
  const double alpha = params.alpha();
  const double c2 = params.c() * params.c();
  TridiagonalSystem sys;
  sys.parity = parity;
  sys.size = size;
  sys.diag.resize(static_cast<std::size_t>(size));
  sys.offdiag.resize(static_cast<std::size_t>(size) - 1);
  for (int j = 0; j < size; ++j) {
    const int k = sys.degree(j);
    const double kd = k;
    const double a_k = jacobi_recurrence_coeff(alpha, k);
    const double a_k1 = jacobi_recurrence_coeff(alpha, k + 1);
    // <x^2 p_k, p_k> = a_k^2 + a_{k+1}^2
    sys.diag[j] = kd * (kd + 2.0 * alpha + 1.0) - c2 * (a_k * a_k + a_k1 * a_k1);
    if (j + 1 < size) {
      // <x^2 p_k, p_{k+2}> = a_{k+1} a_{k+2}
      sys.offdiag[j] = -c2 * a_k1 * jacobi_recurrence_coeff(alpha, k + 2);
    }
  }
  return sys;
}

std::vector<SturmLiouvilleMode> solve_lowest(const TridiagonalSystem& system, int count) {
  if (count < 1 || count > system.size) {
    throw DomainError("solve_lowest: count must be in [1, size]");
  }
  const TridiagonalEigen eig = symmetric_tridiagonal_eigen(system.diag, system.offdiag, true);
  const int n = system.size;
  const int tail_start = n - n / 4;

  std::vector<SturmLiouvilleMode> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (i > 0 && !(eig.values[i] > eig.values[i - 1])) {
      throw NumericError("solve_lowest: eigenvalues not strictly increasing");
    }
    SturmLiouvilleMode& mode = out[i];
    mode.chi = eig.values[i];
    mode.eigvec.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) mode.eigvec[j] = eig.vector_entry(j, i);

    double tail = 0.0;
    for (int j = tail_start; j < n; ++j) tail = std::max(tail, std::fabs(mode.eigvec[j]));
    if (!(tail < kTailTolerance)) {
      throw TruncationError("solve_lowest: eigenvector " + std::to_string(i) +
                            " not resolved by " + std::to_string(n) +
                            " rows; enlarge the truncation");
    }
    refine_tails(system, mode.chi, mode.eigvec);
  }
  return out;
}

int choose_truncation(const ProblemParams& params, int n_max) {
  if (n_max < 0) throw DomainError("choose_truncation: n_max must be >= 0");
  const int from_index = 2 * n_max + 30;
  const int from_c = static_cast<int>(std::ceil(std::numbers::e * params.c() / 2.0)) + 40;
  return std::max(from_index, from_c);
}

std::vector<EigenPair> compute_eigenpairs(const ProblemParams& params, int n_max) {
  return compute_eigenpairs(params, n_max, choose_truncation(params, n_max));
}

std::vector<EigenPair> compute_eigenpairs(const ProblemParams& params, int n_max,
                                          int initial_trunc_order) {
  if (n_max < 0) throw DomainError("compute_eigenpairs: n_max must be >= 0");
  const int even_count = n_max / 2 + 1;
  const int odd_count = (n_max + 1) / 2;

  int trunc = std::max(initial_trunc_order, 2 * n_max + 4);
  std::vector<SturmLiouvilleMode> even, odd;
  for (;;) {
    if (trunc > kMaxTruncationOrder) {
      throw TruncationError("compute_eigenpairs: truncation order exceeds " +
                            std::to_string(kMaxTruncationOrder));
    }
    try {
      const int even_size = trunc / 2 + 1;
      const int odd_size = (trunc - 1) / 2 + 1;
      even = solve_lowest(build_tridiagonal(params, Parity::even, even_size), even_count);
      odd.clear();
      if (odd_count > 0) {
        odd = solve_lowest(build_tridiagonal(params, Parity::odd, odd_size), odd_count);
      }
      break;
    } catch (const TruncationError&) {
      trunc *= 2;
    }
  }

  const double alpha = params.alpha();
  const int even_size = trunc / 2 + 1;
  std::vector<double> p_at_one(static_cast<std::size_t>(2 * even_size + 2));
  for (std::size_t k = 0; k < p_at_one.size(); ++k) {
    p_at_one[k] = jacobi_value_at_one(alpha, static_cast<int>(k)).value();
  }

  std::vector<EigenPair> pairs(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    SturmLiouvilleMode& mode = (n % 2 == 0) ? even[n / 2] : odd[n / 2];
    EigenPair& pair = pairs[n];
    pair.params = params;
    pair.n = n;
    pair.parity = parity_of(n);
    pair.chi = mode.chi;
    pair.trunc_order = trunc;
    pair.coeffs = std::move(mode.eigvec);

    double at_one = 0.0;
    for (std::size_t j = 0; j < pair.coeffs.size(); ++j) {
      at_one += pair.coeffs[j] * p_at_one[pair.degree(static_cast<int>(j))];
    }
    if (at_one < 0.0) {
      for (double& d : pair.coeffs) d = -d;
    }
    if (n > 0 && !(pair.chi > pairs[n - 1].chi)) {
      throw NumericError("compute_eigenpairs: even and odd eigenvalues do not interlace at n = " +
                         std::to_string(n));
    }
  }
  return pairs;
}

}  // namespace laplace_prolate
