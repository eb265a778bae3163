#pragma once

#include <functional>
#include <span>
#include <vector>

#include "laplace_prolate/quadrature.hpp"
#include "laplace_prolate/spectrum.hpp"

namespace laplace_prolate {

enum class Basis { phi, jacobi };

/// Coefficients of a function in the eigenfunction basis phi_k or in the
/// orthonormal Jacobi basis p_k.
struct ExpansionSeries {
  Basis basis = Basis::phi;
  std::vector<double> coeffs;
  ProblemParams params{1.0, 0.0};
};

/// b_k = <f, phi_k>, k = 0..n_terms - 1.
ExpansionSeries expand(const RealFunction& f, const Spectrum& spectrum, const QuadRule& rule,
                       int n_terms);

/// b_k(L f) = nu_k b_k(f).
ExpansionSeries forward_coeffs(const ExpansionSeries& series_f, const Spectrum& spectrum);

/// S_n(g)(x) = sum_{k <= n} b_k phi_k(x).
double project(const ExpansionSeries& series, const Spectrum& spectrum, int n, double x);
std::vector<double> project(const ExpansionSeries& series, const Spectrum& spectrum, int n,
                            std::span<const double> xs);

/// Truncated spectral inverse sum_{k <= N} (b_k(g) / nu_k) phi_k(x).
/// Throws ConditioningError if some nu_k, k <= N, is below 1e-250.
double invert(const ExpansionSeries& series_g, const Spectrum& spectrum, int N, double x);
std::vector<double> invert(const ExpansionSeries& series_g, const Spectrum& spectrum, int N,
                           std::span<const double> xs);

/// f(t) = e^{beta t} sin(a t) and its closed-form image g = L_c^0 f.
struct TestPair {
  double a = 0.0;
  double beta = 0.0;
  double c = 1.0;
  RealFunction f;
  RealFunction g;
};

/// Throws DomainError when a = 0 and the denominator a^2 + (c x + beta)^2
/// vanishes somewhere on [-1, 1].
TestPair test_pair(double a, double beta, double c);

/// Pi_n(g)(x) = sum_{k <= n} <g, p_k> p_k(x) in the orthonormal Jacobi basis.
double legendre_project(const RealFunction& g, double alpha, int n, const QuadRule& rule,
                        double x);
ExpansionSeries jacobi_expand(const RealFunction& g, double alpha, int n, const QuadRule& rule);
std::vector<double> jacobi_series_values(const ExpansionSeries& series, double alpha,
                                         std::span<const double> xs);

/// n equispaced points on [-1, 1], endpoints included.
std::vector<double> uniform_grid(int n);

struct ErrorMetrics {
  double sup = 0.0;  // max over the uniform grid
  double l2 = 0.0;   // weighted L^2 by the quadrature rule
};

using GridEvaluator = std::function<std::vector<double>(std::span<const double>)>;

/// Compares `approx` to `exact` on a uniform grid of `grid_points` and in the
/// rule's weighted L^2 norm.
ErrorMetrics measure_errors(const RealFunction& exact, const GridEvaluator& approx,
                            const QuadRule& rule, int grid_points);

}  // namespace laplace_prolate
