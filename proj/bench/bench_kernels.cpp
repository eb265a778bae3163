// Serial reference against the OpenMP build of each kernel.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "laplace_prolate/approx.hpp"
#include "laplace_prolate/kernels.hpp"
#include "laplace_prolate/quadrature.hpp"
#include "laplace_prolate/spectrum.hpp"

using namespace laplace_prolate;

namespace {

struct Fixture {
  ProblemParams params{5 * std::numbers::pi, -0.75};
  std::vector<EigenPair> pairs = compute_eigenpairs(params, 60);
  QuadRule rule = gauss_jacobi_rule(-0.75, 400);
  std::vector<double> grid = uniform_grid(1001);
  std::vector<double> f = [this] {
    std::vector<double> v(rule.nodes.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::sin(7 * rule.nodes[i]);
    return v;
  }();
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

template <auto Kernel>
void phi_table(benchmark::State& state) {
  const Fixture& fx = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(fx.pairs, fx.grid));
}

template <auto Kernel>
void nystrom_matrix(benchmark::State& state) {
  const Fixture& fx = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(fx.params.c(), fx.rule));
}

template <auto Kernel>
void apply_operator(benchmark::State& state) {
  const Fixture& fx = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(fx.params.c(), fx.f, fx.rule, fx.grid));
}

template <auto Kernel>
void nu_galerkin(benchmark::State& state) {
  const Fixture& fx = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(fx.pairs, fx.params));
}

}  // namespace

BENCHMARK(phi_table<kernels::serial::phi_table>)->Name("phi_table/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(phi_table<kernels::omp::phi_table>)->Name("phi_table/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(nystrom_matrix<kernels::serial::nystrom_matrix>)->Name("nystrom_matrix/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(nystrom_matrix<kernels::omp::nystrom_matrix>)->Name("nystrom_matrix/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(apply_operator<kernels::serial::apply_operator>)->Name("apply_operator/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(apply_operator<kernels::omp::apply_operator>)->Name("apply_operator/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(nu_galerkin<kernels::serial::nu_galerkin>)->Name("nu_galerkin/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(nu_galerkin<kernels::omp::nu_galerkin>)->Name("nu_galerkin/omp")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
