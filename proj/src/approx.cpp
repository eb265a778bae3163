#include "laplace_prolate/approx.hpp"

#include <cmath>
#include <string>

#include "laplace_prolate/errors.hpp"
#include "laplace_prolate/kernels.hpp"
#include "laplace_prolate/specfun.hpp"

namespace laplace_prolate {

namespace {

void require_terms(const Spectrum& spectrum, int count, const char* what) {
  if (count < 0 || count > spectrum.size()) {
    throw DomainError(std::string(what) + ": needs " + std::to_string(count) +
                      " eigenpairs, spectrum has " + std::to_string(spectrum.size()));
  }
}

std::vector<double> phi_series(std::span<const double> weights, const Spectrum& spectrum,
                               std::span<const double> xs) {
  const std::size_t terms = weights.size();
  const std::vector<double> table =
      kernels::omp::phi_table(std::span(spectrum.pairs).first(terms), xs);
  std::vector<double> out(xs.size(), 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < terms; ++k) s += weights[k] * table[k * xs.size() + i];
    out[i] = s;
  }
  return out;
}

std::vector<double> inverse_weights(const ExpansionSeries& series_g, const Spectrum& spectrum,
                                    int N) {
  if (N < 0 || N >= static_cast<int>(series_g.coeffs.size())) {
    throw DomainError("invert: N must be below the number of coefficients");
  }
  require_terms(spectrum, N + 1, "invert");
  const double floor = std::log(1e-250);
  std::vector<double> w(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    if (spectrum.log_nu[k] < floor) {
      throw ConditioningError("invert: nu_" + std::to_string(k) +
                              " is below 1e-250; the inversion is meaningless there");
    }
    w[k] = series_g.coeffs[k] / spectrum.nu[k];
  }
  return w;
}

}  // namespace

ExpansionSeries expand(const RealFunction& f, const Spectrum& spectrum, const QuadRule& rule,
                       int n_terms) {
  require_terms(spectrum, n_terms, "expand");
  if (rule.alpha != spectrum.params.alpha()) {
    throw DomainError("expand: rule weight does not match alpha");
  }
  const std::vector<double> f_at = sample_at_nodes(f, rule);
  const std::vector<double> table =
      kernels::omp::phi_table(std::span(spectrum.pairs).first(n_terms), rule.nodes);
  ExpansionSeries s;
  s.basis = Basis::phi;
  s.params = spectrum.params;
  s.coeffs.resize(static_cast<std::size_t>(n_terms));
  const std::size_t m = rule.nodes.size();
  for (int k = 0; k < n_terms; ++k) {
    s.coeffs[k] = inner_product(f_at, std::span(table).subspan(k * m, m), rule);
  }
  return s;
}

ExpansionSeries forward_coeffs(const ExpansionSeries& series_f, const Spectrum& spectrum) {
  if (series_f.basis != Basis::phi || !(series_f.params == spectrum.params)) {
    throw DomainError("forward_coeffs: series is not in this spectrum's basis");
  }
  require_terms(spectrum, static_cast<int>(series_f.coeffs.size()), "forward_coeffs");
  ExpansionSeries g = series_f;
  for (std::size_t k = 0; k < g.coeffs.size(); ++k) g.coeffs[k] *= spectrum.nu[k];
  return g;
}

std::vector<double> project(const ExpansionSeries& series, const Spectrum& spectrum, int n,
                            std::span<const double> xs) {
  if (n < 0 || n >= static_cast<int>(series.coeffs.size())) {
    throw DomainError("project: n must be below the number of coefficients");
  }
  require_terms(spectrum, n + 1, "project");
  return phi_series(std::span(series.coeffs).first(static_cast<std::size_t>(n) + 1), spectrum,
                    xs);
}

double project(const ExpansionSeries& series, const Spectrum& spectrum, int n, double x) {
  const double xs[] = {x};
  return project(series, spectrum, n, xs)[0];
}

std::vector<double> invert(const ExpansionSeries& series_g, const Spectrum& spectrum, int N,
                           std::span<const double> xs) {
  const std::vector<double> w = inverse_weights(series_g, spectrum, N);
  return phi_series(w, spectrum, xs);
}

double invert(const ExpansionSeries& series_g, const Spectrum& spectrum, int N, double x) {
  const double xs[] = {x};
  return invert(series_g, spectrum, N, xs)[0];
}

TestPair test_pair(double a, double beta, double c) {
  if (!(c > 0.0)) throw DomainError("test_pair: c must be > 0");
  if (a == 0.0 && std::fabs(beta) <= c) {
    throw DomainError("test_pair: a = 0 with |beta| <= c makes g singular on [-1, 1]");
  }
  TestPair p;
  p.a = a;
  p.beta = beta;
  p.c = c;
  p.f = [a, beta](double t) { return std::exp(beta * t) * std::sin(a * t); };
  p.g = [a, beta, c](double x) {
    const double u = c * x + beta;
    return 2.0 / (a * a + u * u) * (u * std::sin(a) * std::cosh(u) - a * std::cos(a) * std::sinh(u));
  };
  return p;
}

ExpansionSeries jacobi_expand(const RealFunction& g, double alpha, int n, const QuadRule& rule) {
  if (n < 0) throw DomainError("jacobi_expand: n must be >= 0");
  if (rule.alpha != alpha) throw DomainError("jacobi_expand: rule weight does not match alpha");
  const std::vector<double> g_at = sample_at_nodes(g, rule);
  const JacobiRecurrence rec(alpha, n);
  std::vector<double> acc(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < rule.size(); ++i) {
    rec.evaluate(rule.nodes[i], p.data());
    for (int k = 0; k <= n; ++k) acc[k] += rule.weights[i] * g_at[i] * p[k];
  }
  ExpansionSeries s;
  s.basis = Basis::jacobi;
  s.params = ProblemParams(1.0, alpha);
  s.coeffs = std::move(acc);
  return s;
}

std::vector<double> jacobi_series_values(const ExpansionSeries& series, double alpha,
                                         std::span<const double> xs) {
  if (series.basis != Basis::jacobi || series.coeffs.empty()) {
    throw DomainError("jacobi_series_values: needs a non-empty Jacobi series");
  }
  const int n = static_cast<int>(series.coeffs.size()) - 1;
  const JacobiRecurrence rec(alpha, n);
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(std::fabs(xs[i]) <= 1.0)) throw DomainError("jacobi_series_values: |x| must be <= 1");
    rec.evaluate(xs[i], p.data());
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += series.coeffs[k] * p[k];
    out[i] = s;
  }
  return out;
}

double legendre_project(const RealFunction& g, double alpha, int n, const QuadRule& rule,
                        double x) {
  const double xs[] = {x};
  return jacobi_series_values(jacobi_expand(g, alpha, n, rule), alpha, xs)[0];
}

std::vector<double> uniform_grid(int n) {
  if (n < 2) throw DomainError("uniform_grid: need at least 2 points");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[i] = -1.0 + 2.0 * i / (n - 1.0);
  xs.back() = 1.0;
  return xs;
}

ErrorMetrics measure_errors(const RealFunction& exact, const GridEvaluator& approx,
                            const QuadRule& rule, int grid_points) {
  const std::vector<double> grid = uniform_grid(grid_points);
  const std::vector<double> on_grid = approx(grid);
  ErrorMetrics e;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    e.sup = std::max(e.sup, std::fabs(exact(grid[i]) - on_grid[i]));
  }
  const std::vector<double> on_nodes = approx(rule.nodes);
  std::vector<double> diff(on_nodes.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = exact(rule.nodes[i]) - on_nodes[i];
  e.l2 = weighted_norm(diff, rule);
  return e;
}

}  // namespace laplace_prolate
