#include "laplace_prolate/quadrature.hpp"

#include <cmath>
#include <string>

#include "laplace_prolate/errors.hpp"
#include "laplace_prolate/specfun.hpp"
#include "laplace_prolate/tridiagonal.hpp"

namespace laplace_prolate {

namespace {

// p_m(x) and p_m'(x) by the orthonormal recurrence, plus sum_{k<m} p_k(x)^2.
struct RecurrenceValue {
  double p = 0.0;
  double dp = 0.0;
  double christoffel_sum = 0.0;
};

RecurrenceValue evaluate_recurrence(const std::vector<double>& a, double p0, int m, double x) {
  double p_prev = 0.0, dp_prev = 0.0;
  double p = p0, dp = 0.0;
  double sum = 0.0;
  for (int k = 0; k < m; ++k) {
    sum += p * p;
    const double p_next = (x * p - a[k] * p_prev) / a[k + 1];
    const double dp_next = (p + x * dp - a[k] * dp_prev) / a[k + 1];
    p_prev = p;
    dp_prev = dp;
    p = p_next;
    dp = dp_next;
  }
  return {p, dp, sum};
}

}  // namespace

double weight_total_mass(double alpha) { return jacobi_norm(alpha, 0).value(); }

QuadRule gauss_jacobi_rule(double alpha, int m) {
  if (!(alpha > -1.0)) throw DomainError("gauss_jacobi_rule: alpha must be > -1");
  if (m < 1) throw DomainError("gauss_jacobi_rule: m must be >= 1");

  std::vector<double> a(static_cast<std::size_t>(m) + 1, 0.0);
  for (int k = 1; k <= m; ++k) a[k] = jacobi_recurrence_coeff(alpha, k);

  const std::vector<double> diag(static_cast<std::size_t>(m), 0.0);
  const std::vector<double> offdiag(a.begin() + 1, a.begin() + m);
  const TridiagonalEigen eig = symmetric_tridiagonal_eigen(diag, offdiag, false);

  const double p0 = 1.0 / std::sqrt(weight_total_mass(alpha));
  QuadRule rule;
  rule.alpha = alpha;
  rule.nodes = eig.values;
  rule.weights.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    double x = rule.nodes[i];
    for (int it = 0; it < 3; ++it) {
      const RecurrenceValue v = evaluate_recurrence(a, p0, m, x);
      if (v.dp == 0.0) break;
      const double step = v.p / v.dp;
      if (!std::isfinite(step) || std::fabs(step) > 1e-6) break;
      x -= step;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / evaluate_recurrence(a, p0, m, x).christoffel_sum;
  }

  // Enforce exact mirror symmetry.
  for (int i = 0; i < m / 2; ++i) {
    const int j = m - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = w;
    rule.weights[j] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;

  for (int i = 0; i < m; ++i) {
    if (!(rule.weights[i] > 0.0) || (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1]))) {
      throw NumericError("gauss_jacobi_rule: invalid rule for m = " + std::to_string(m));
    }
  }
  return rule;
}

std::vector<double> sample_at_nodes(const RealFunction& f, const QuadRule& rule) {
  std::vector<double> out(rule.nodes.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f(rule.nodes[i]);
    if (!std::isfinite(out[i])) {
      throw EvaluationError("non-finite function value at node x = " + std::to_string(rule.nodes[i]));
    }
  }
  return out;
}

double inner_product(std::span<const double> f_at_nodes, std::span<const double> g_at_nodes,
                     const QuadRule& rule) {
  if (f_at_nodes.size() != rule.nodes.size() || g_at_nodes.size() != rule.nodes.size()) {
    throw DomainError("inner_product: sample count does not match rule size");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f_at_nodes[i] * g_at_nodes[i];
  }
  return sum;
}

double inner_product(const RealFunction& f, const RealFunction& g, const QuadRule& rule) {
  const auto fv = sample_at_nodes(f, rule);
  const auto gv = sample_at_nodes(g, rule);
  return inner_product(fv, gv, rule);
}

double weighted_norm(std::span<const double> at_nodes, const QuadRule& rule) {
  return std::sqrt(inner_product(at_nodes, at_nodes, rule));
}

}  // namespace laplace_prolate
