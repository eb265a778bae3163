#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "laplace_prolate/eigensystem.hpp"
#include "laplace_prolate/log_value.hpp"
#include "laplace_prolate/quadrature.hpp"

namespace laplace_prolate::kernels {

// The hot loops of the library in two builds. `serial` is the reference;
// `omp` splits the outer loop across OpenMP threads. Every output element is
// computed by the same arithmetic in both, so results agree bit for bit.

namespace serial {

/// phi_n(x_i) for every pair and point, row-major: out[n * xs.size() + i].
std::vector<double> phi_table(std::span<const EigenPair> pairs, std::span<const double> xs);

/// sqrt(w_i) e^{c x_i x_j} sqrt(w_j).
Eigen::MatrixXd nystrom_matrix(double c, const QuadRule& rule);

/// sum_i w_i e^{c x x_i} f_i for every x in xs.
std::vector<double> apply_operator(double c, std::span<const double> f_at_nodes,
                                   const QuadRule& rule, std::span<const double> xs);

/// Galerkin-row nu for every pair (all pairs must share `params`).
std::vector<LogValue> nu_galerkin(std::span<const EigenPair> pairs, const ProblemParams& params);

}  // namespace serial

namespace omp {

std::vector<double> phi_table(std::span<const EigenPair> pairs, std::span<const double> xs);
Eigen::MatrixXd nystrom_matrix(double c, const QuadRule& rule);
std::vector<double> apply_operator(double c, std::span<const double> f_at_nodes,
                                   const QuadRule& rule, std::span<const double> xs);
std::vector<LogValue> nu_galerkin(std::span<const EigenPair> pairs, const ProblemParams& params);

}  // namespace omp

}  // namespace laplace_prolate::kernels
