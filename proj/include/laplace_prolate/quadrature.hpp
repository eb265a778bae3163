#pragma once

#include <functional>
#include <span>
#include <vector>

namespace laplace_prolate {

/// Gauss-Jacobi rule for the weight (1 - x^2)^alpha on [-1, 1].
/// Nodes strictly increasing, symmetric about 0; weights positive and symmetric.
struct QuadRule {
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// m-point rule. Nodes are the eigenvalues of the symmetric Jacobi matrix
/// (Golub-Welsch), polished by Newton steps on p_m; weights are the
/// Christoffel numbers 1 / sum_{k<m} p_k(x_i)^2, which equal
/// h_0 * (first eigenvector component)^2.
QuadRule gauss_jacobi_rule(double alpha, int m);

/// Total mass 2^{2 alpha + 1} B(alpha + 1, alpha + 1) of the weight.
double weight_total_mass(double alpha);

using RealFunction = std::function<double(double)>;

/// sum_i w_i f(x_i) g(x_i). Throws EvaluationError on a non-finite value.
double inner_product(const RealFunction& f, const RealFunction& g, const QuadRule& rule);

/// Same for values already sampled at the nodes.
double inner_product(std::span<const double> f_at_nodes, std::span<const double> g_at_nodes,
                     const QuadRule& rule);

/// f sampled at the rule's nodes; throws EvaluationError on a non-finite value.
std::vector<double> sample_at_nodes(const RealFunction& f, const QuadRule& rule);

/// Weighted L^2 norm sqrt(sum_i w_i v_i^2) of node samples.
double weighted_norm(std::span<const double> at_nodes, const QuadRule& rule);

}  // namespace laplace_prolate
