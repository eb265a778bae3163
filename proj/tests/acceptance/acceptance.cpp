// Acceptance run: one PASS/FAIL line per criterion AC1..AC12.
//
// Exit status is nonzero when any criterion fails, except for the failures
// listed in kKnownCounterexamples. Those still print FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "laplace_prolate/approx.hpp"
#include "laplace_prolate/bounds.hpp"
#include "laplace_prolate/commands.hpp"
#include "laplace_prolate/kernels.hpp"
#include "laplace_prolate/quadrature.hpp"
#include "laplace_prolate/spectrum.hpp"

using namespace laplace_prolate;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// The local estimate (1 - t^2) w(t) phi_n(t)^2 <= 1 + alpha is violated for
// alpha = -3/4 already at c -> 0, where phi_n is a Jacobi polynomial.
const std::set<std::string> kKnownCounterexamples = {"AC12"};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

Outcome ac1() {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  for (const auto& e : cli::table1_reference()) {
    const Spectrum s = build_spectrum(ProblemParams(e.k * kPi, e.alpha), 0);
    if (!cli::same_significant_digits(s.nu[0], e.nu0, 5)) ++bad;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {bad == 0 && secs < 30.0,
          std::to_string(10 - bad) + "/10 entries to 5 digits in " + fmt("%.2f", secs) + " s"};
}

Outcome ac2() {
  double worst = 0.0;  // max |diff| / tol
  for (double a : {-0.75, 0.0, 1.0}) {
    const ProblemParams params(kPi, a);
    const Spectrum s = build_spectrum(params, 19, NuMethod::boundary_ratio);
    const NystromSpectrum ny = nystrom_spectrum(params, 300);
    const double tol = std::max(1e-10 * s.nu[0], 1e-12);
    for (int n = 0; n < 20; ++n) worst = std::max(worst, std::fabs(s.nu[n] - ny.eigenvalues[n]) / tol);
  }
  return {worst < 1.0, "max |nu_ratio - nu_nystrom| / tol = " + fmt("%.2e", worst)};
}

Outcome ac3() {
  const ProblemParams params(kPi, -0.75);
  const Spectrum s = build_spectrum(params, 80);
  double partial = 0.0;
  for (int n = 80; n >= 0; --n) partial += s.nu[n];
  const double exact = trace_exact(params);
  const double rel = std::fabs(exact - partial) / exact;
  return {rel < 1e-12, "relative gap " + fmt("%.2e", rel)};
}

Outcome ac4() {
  bool ok = true;
  double min_margin = INFINITY;
  int count = 0;
  for (double c : {kPi, 2 * kPi, 3 * kPi}) {
    for (double a : {-0.75, 1.0}) {
      const ProblemParams params(c, a);
      const Spectrum s = build_spectrum(params, 60);
      for (int n = 0; n <= 60; ++n) {
        if (!(n > kE * c / 2 + 1)) continue;
        const auto lb = log_nu_upper_bound(params, n);
        ++count;
        if (!lb || !(s.log_nu[n] < *lb)) ok = false;
        if (lb) min_margin = std::min(min_margin, *lb - s.log_nu[n]);
      }
    }
  }
  return {ok && count > 0, std::to_string(count) + " cases, min bound/nu = " +
                               fmt("%.3g", std::exp(min_margin))};
}

Outcome ac5() {
  bool ok = true;
  double min_ratio = INFINITY, min_excess = INFINITY;
  for (double a : {0.0, 1.0}) {
    for (int k = 1; k <= 5; ++k) {
      const double c = k * kPi;
      const ProblemParams params(c, a);
      const BestLowerBound b = nu0_lower_bound_best(params);
      const double nu0 = build_spectrum(params, 0).nu[0];
      ok = ok && b.bound <= nu0;
      min_ratio = std::min(min_ratio, nu0 / b.bound);
      const double h = 1e-3 * c;
      const double slope = (build_spectrum(ProblemParams(c + h, a), 0).log_nu[0] -
                            build_spectrum(ProblemParams(c - h, a), 0).log_nu[0]) /
                           (2 * h);
      ok = ok && slope >= b.gamma_star * b.gamma_star;
      min_excess = std::min(min_excess, slope - b.gamma_star * b.gamma_star);
    }
  }
  return {ok, "min nu_0 / bound = " + fmt("%.3g", min_ratio) +
                  ", min (d log nu_0 / dc - gamma*^2) = " + fmt("%.3g", min_excess)};
}

Outcome ac6() {
  double worst = 0.0;
  for (double c : {kPi, 2 * kPi}) {
    for (double a : {-0.75, 1.0}) {
      const ProblemParams params(c, a);
      const Spectrum s = build_spectrum(params, 30);
      const QuadRule rule = gauss_jacobi_rule(a, 400);
      const auto table = kernels::omp::phi_table(s.pairs, rule.nodes);
      const std::size_t m = rule.nodes.size();
      for (int n = 0; n <= 30; ++n) {
        const std::span<const double> phi(table.data() + n * m, m);
        const auto lphi = kernels::omp::apply_operator(c, phi, rule, rule.nodes);
        std::vector<double> r(m);
        for (std::size_t i = 0; i < m; ++i) r[i] = lphi[i] - s.nu[n] * phi[i];
        worst = std::max(worst, weighted_norm(r, rule) / s.nu[0]);
      }
    }
  }
  return {worst < 1e-9, "max ||L phi - nu phi|| / nu_0 = " + fmt("%.2e", worst)};
}

Outcome ac7() {
  double orth = 0.0, parity = 0.0;
  const std::vector<double> grid = uniform_grid(1001);
  std::vector<double> neg(grid.rbegin(), grid.rend());
  for (double c : {kPi, 2 * kPi, 3 * kPi, 4 * kPi, 5 * kPi}) {
    for (double a : {-0.75, 0.0, 1.0}) {
      const auto pairs = compute_eigenpairs(ProblemParams(c, a), 30);
      const QuadRule rule = gauss_jacobi_rule(a, 400);
      const std::size_t m = rule.nodes.size();
      const auto t = kernels::omp::phi_table(pairs, rule.nodes);
      for (int i = 0; i <= 30; ++i) {
        for (int j = 0; j <= i; ++j) {
          const double ip = inner_product(std::span(t).subspan(i * m, m),
                                          std::span(t).subspan(j * m, m), rule);
          orth = std::max(orth, std::fabs(ip - (i == j ? 1.0 : 0.0)));
        }
      }
      const auto pos = kernels::omp::phi_table(pairs, grid);
      const auto mir = kernels::omp::phi_table(pairs, neg);
      for (int n = 0; n <= 30; ++n) {
        const double sign = (n % 2) ? -1.0 : 1.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          parity = std::max(parity, std::fabs(mir[n * grid.size() + i] - sign * pos[n * grid.size() + i]));
        }
      }
    }
  }
  return {orth < 1e-10 && parity < 1e-11,
          "max |<phi_n, phi_m> - delta| = " + fmt("%.2e", orth) + ", max parity deviation = " +
              fmt("%.2e", parity)};
}

Outcome ac8() {
  bool ok = true;
  int count = 0;
  for (double c : {kPi, 2 * kPi, 3 * kPi, 4 * kPi, 5 * kPi}) {
    for (double a : {-0.75, 0.0, 1.0}) {
      const auto pairs = compute_eigenpairs(ProblemParams(c, a), 60);
      for (const EigenPair& p : pairs) {
        const double top = p.n * (p.n + 2 * a + 1);
        ok = ok && top - c * c <= p.chi && p.chi <= top;
        ++count;
      }
    }
  }
  return {ok, std::to_string(count) + " eigenvalues checked"};
}

struct Example {
  ProblemParams params{5 * kPi, 0.0};
  TestPair tp = test_pair(5 * kPi, 3.0, 5 * kPi);
  QuadRule rule = gauss_jacobi_rule(0.0, 400);
  Spectrum s = build_spectrum(params, 40);
  ExpansionSeries bg = forward_coeffs(expand(tp.f, s, rule, 41), s);
};

bool within_factor_2(double v, double ref) { return v >= ref / 2 && v <= ref * 2; }

Outcome ac9(const Example& e) {
  const GridEvaluator s16 = [&](std::span<const double> xs) { return project(e.bg, e.s, 16, xs); };
  const ErrorMetrics es = measure_errors(e.tp.g, s16, e.rule, 1001);
  const auto jac = [&](int n) {
    const ExpansionSeries pj = jacobi_expand(e.tp.g, 0.0, n, e.rule);
    const GridEvaluator ev = [&](std::span<const double> xs) { return jacobi_series_values(pj, 0.0, xs); };
    return measure_errors(e.tp.g, ev, e.rule, 1001);
  };
  const ErrorMetrics j16 = jac(16), j28 = jac(28);
  const bool ok = es.sup >= 2.0e-4 && es.sup <= 8.0e-4 && es.l2 >= 4.4e-5 && es.l2 <= 1.8e-4 &&
                  j16.sup >= 1e5 * es.sup && j16.l2 >= 1e5 * es.l2 &&
                  within_factor_2(j28.sup, 1.82e-4) && within_factor_2(j28.l2, 2.63e-5);
  return {ok, "S_16 " + fmt("%.3e", es.sup) + " / " + fmt("%.3e", es.l2) + ", Pi_16 " +
                  fmt("%.3e", j16.sup) + " / " + fmt("%.3e", j16.l2) + ", Pi_28 " +
                  fmt("%.3e", j28.sup) + " / " + fmt("%.3e", j28.l2)};
}

Outcome ac10(const Example& e) {
  const GridEvaluator fn = [&](std::span<const double> xs) { return invert(e.bg, e.s, 30, xs); };
  const ErrorMetrics m = measure_errors(e.tp.f, fn, e.rule, 1001);

  const ProblemParams params(kPi, 0.0);
  const Spectrum s = build_spectrum(params, 25);
  const QuadRule rule = gauss_jacobi_rule(0.0, 400);
  const TestPair tp = test_pair(kPi, 1.0, kPi);
  const ExpansionSeries bg = forward_coeffs(expand(tp.f, s, rule, 26), s);
  const GridEvaluator rt = [&](std::span<const double> xs) { return invert(bg, s, 25, xs); };
  const double round_trip = measure_errors(tp.f, rt, rule, 1001).sup;

  const bool ok = within_factor_2(m.sup, 1.67e-4) && within_factor_2(m.l2, 2.95e-5) && round_trip < 1e-8;
  return {ok, "f_30 " + fmt("%.3e", m.sup) + " / " + fmt("%.3e", m.l2) + ", round trip " +
                  fmt("%.2e", round_trip)};
}

Outcome ac11() {
  bool ok = true;
  int count = 0;
  for (const ProblemParams& params : {ProblemParams(kPi, -0.75), ProblemParams(2 * kPi, 1.0)}) {
    const Spectrum s = build_spectrum(params, 10);
    for (int n = 0; n <= 10; ++n) {
      const EigenPair& p = s.pairs[n];
      for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
        if (p.coeffs[j] == 0.0) continue;
        ++count;
        ok = ok && std::log(std::fabs(p.coeffs[j])) <=
                       log_coeff_decay_bound(params, s.log_nu[n], p.degree(static_cast<int>(j)));
      }
    }
  }
  return {ok, std::to_string(count) + " coefficients checked"};
}

Outcome ac12() {
  int lemma_cases = 0, lemma_bad = 0, sup_cases = 0, sup_bad = 0, off_end = 0;
  std::string first_bad;
  std::set<double> bad_alphas;
  const std::vector<double> grid = uniform_grid(1001);
  for (double c : {kPi, 2 * kPi, 3 * kPi}) {
    for (double a : {-0.75, 1.0}) {
      const ProblemParams params(c, a);
      const Spectrum s = build_spectrum(params, 40);
      const auto table = kernels::omp::phi_table(s.pairs, grid);
      for (int n = 0; n <= 40; ++n) {
        const BoundReport r = local_estimate_check(s.pairs[n], params);
        if (r.applicable) {
          ++lemma_cases;
          if (!r.satisfied) {
            bad_alphas.insert(a);
            if (lemma_bad++ == 0) {
              first_bad = "c=" + fmt("%.4g", c) + " alpha=" + fmt("%g", a) + " n=" +
                          std::to_string(n) + " lhs=" + fmt("%.3f", r.lhs) + " > " + fmt("%.2f", r.rhs);
            }
          }
        }
        const auto bound = phi_sup_bound(s.pairs[n].chi, params);
        if (!bound) continue;
        ++sup_cases;
        double sup = 0.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double v = std::fabs(table[n * grid.size() + i]);
          if (v > sup) sup = v, arg = i;
        }
        if (sup > *bound) ++sup_bad;
        if (arg != 0 && arg != grid.size() - 1) ++off_end;
      }
    }
  }
  std::string detail = "local estimate " + std::to_string(lemma_cases - lemma_bad) + "/" +
                       std::to_string(lemma_cases) + " hold; uniform bound " +
                       std::to_string(sup_cases - sup_bad) + "/" + std::to_string(sup_cases) +
                       " hold, sup off x=+-1 in " + std::to_string(off_end);
  if (!first_bad.empty()) {
    detail += "; violations only at alpha in {";
    for (double a : bad_alphas) detail += (a == *bad_alphas.begin() ? "" : ", ") + fmt("%g", a);
    detail += "}, first " + first_bad;
  }
  return {lemma_bad == 0 && sup_bad == 0 && off_end == 0 && sup_cases > 0, detail};
}

}  // namespace

int main() {
  const Example example;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1},
      {"AC2", ac2},
      {"AC3", ac3},
      {"AC4", ac4},
      {"AC5", ac5},
      {"AC6", ac6},
      {"AC7", ac7},
      {"AC8", ac8},
      {"AC9", [&] { return ac9(example); }},
      {"AC10", [&] { return ac10(example); }},
      {"AC11", ac11},
      {"AC12", ac12},
  };
  int unexpected = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const bool known = kKnownCounterexamples.count(name) > 0;
    std::printf("%-5s %s  %s%s\n", name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                (!o.pass && known) ? "  [known counterexample]" : "");
    if (!o.pass && !known) ++unexpected;
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
