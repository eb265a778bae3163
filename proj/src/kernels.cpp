#include "laplace_prolate/kernels.hpp"

#include <cmath>
#include <exception>

#include "laplace_prolate/errors.hpp"
#include "laplace_prolate/specfun.hpp"
#include "laplace_prolate/spectrum.hpp"

namespace laplace_prolate::kernels {

namespace {

int max_degree(std::span<const EigenPair> pairs) {
  int deg = 0;
  for (const auto& p : pairs) {
    if (!p.coeffs.empty()) deg = std::max(deg, p.degree(static_cast<int>(p.coeffs.size()) - 1));
  }
  return deg;
}

double alpha_of(std::span<const EigenPair> pairs) {
  return pairs.empty() ? 0.0 : pairs.front().params.alpha();
}

void phi_column(std::span<const EigenPair> pairs, const JacobiRecurrence& rec, double x,
                std::size_t i, std::size_t npts, double* work, double* out) {
  rec.evaluate(x, work);
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    const EigenPair& p = pairs[n];
    double s = 0.0;
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
      s += p.coeffs[j] * work[p.degree(static_cast<int>(j))];
    }
    out[n * npts + i] = s;
  }
}

std::vector<double> sqrt_weights(const QuadRule& rule) {
  std::vector<double> s(rule.weights.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::sqrt(rule.weights[i]);
  return s;
}

// Symmetric in (i, j) bit for bit: both products commute exactly.
double nystrom_entry(double c, const QuadRule& rule, const std::vector<double>& s, int i, int j) {
  return (s[i] * s[j]) * std::exp(c * (rule.nodes[i] * rule.nodes[j]));
}

double apply_at(double c, std::span<const double> f, const QuadRule& rule, double x) {
  double s = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    s += rule.weights[i] * std::exp(c * x * rule.nodes[i]) * f[i];
  }
  return s;
}

void check_sizes(std::span<const double> f, const QuadRule& rule) {
  if (static_cast<int>(f.size()) != rule.size()) {
    throw DomainError("apply_operator: sample count does not match the rule");
  }
}

JacobiMoments moments_for(std::span<const EigenPair> pairs, const ProblemParams& params) {
  return JacobiMoments(params.alpha(), galerkin_moment_order(max_degree(pairs), params.c()));
}

}  // namespace

namespace serial {

std::vector<double> phi_table(std::span<const EigenPair> pairs, std::span<const double> xs) {
  const std::size_t npts = xs.size();
  std::vector<double> out(pairs.size() * npts);
  if (pairs.empty()) return out;
  const JacobiRecurrence rec(alpha_of(pairs), max_degree(pairs));
  std::vector<double> work(static_cast<std::size_t>(rec.kmax()) + 1);
  for (std::size_t i = 0; i < npts; ++i) {
    phi_column(pairs, rec, xs[i], i, npts, work.data(), out.data());
  }
  return out;
}

Eigen::MatrixXd nystrom_matrix(double c, const QuadRule& rule) {
  const int m = rule.size();
  const std::vector<double> s = sqrt_weights(rule);
  Eigen::MatrixXd a(m, m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) a(i, j) = nystrom_entry(c, rule, s, i, j);
  }
  return a;
}

std::vector<double> apply_operator(double c, std::span<const double> f_at_nodes,
                                   const QuadRule& rule, std::span<const double> xs) {
  check_sizes(f_at_nodes, rule);
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = apply_at(c, f_at_nodes, rule, xs[i]);
  return out;
}

std::vector<LogValue> nu_galerkin(std::span<const EigenPair> pairs, const ProblemParams& params) {
  std::vector<LogValue> out(pairs.size());
  if (pairs.empty()) return out;
  const JacobiMoments moments = moments_for(pairs, params);
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    out[n] = eigenvalue_nu_galerkin(pairs[n], params, moments);
  }
  return out;
}

}  // namespace serial

namespace omp {

std::vector<double> phi_table(std::span<const EigenPair> pairs, std::span<const double> xs) {
  const std::size_t npts = xs.size();
  std::vector<double> out(pairs.size() * npts);
  if (pairs.empty()) return out;
  const JacobiRecurrence rec(alpha_of(pairs), max_degree(pairs));
  const long long count = static_cast<long long>(npts);
#pragma omp parallel
  {
    std::vector<double> work(static_cast<std::size_t>(rec.kmax()) + 1);
#pragma omp for schedule(static)
    for (long long i = 0; i < count; ++i) {
      phi_column(pairs, rec, xs[i], static_cast<std::size_t>(i), npts, work.data(), out.data());
    }
  }
  return out;
}

Eigen::MatrixXd nystrom_matrix(double c, const QuadRule& rule) {
  const int m = rule.size();
  const std::vector<double> s = sqrt_weights(rule);
  Eigen::MatrixXd a(m, m);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) a(i, j) = nystrom_entry(c, rule, s, i, j);
  }
  return a;
}

std::vector<double> apply_operator(double c, std::span<const double> f_at_nodes,
                                   const QuadRule& rule, std::span<const double> xs) {
  check_sizes(f_at_nodes, rule);
  std::vector<double> out(xs.size());
  const long long count = static_cast<long long>(xs.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) out[i] = apply_at(c, f_at_nodes, rule, xs[i]);
  return out;
}

std::vector<LogValue> nu_galerkin(std::span<const EigenPair> pairs, const ProblemParams& params) {
  std::vector<LogValue> out(pairs.size());
  if (pairs.empty()) return out;
  const JacobiMoments moments = moments_for(pairs, params);
  const long long count = static_cast<long long>(pairs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long long n = 0; n < count; ++n) {
    try {
      out[n] = eigenvalue_nu_galerkin(pairs[n], params, moments);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace omp

}  // namespace laplace_prolate::kernels
