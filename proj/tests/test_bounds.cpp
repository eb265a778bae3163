#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>

#include "laplace_prolate/approx.hpp"
#include "laplace_prolate/bounds.hpp"
#include "laplace_prolate/errors.hpp"
#include "laplace_prolate/quadrature.hpp"
#include "laplace_prolate/spectrum.hpp"

using namespace laplace_prolate;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
}  // namespace

TEST_CASE("k_alpha") {
  CHECK(k_alpha(0.0) == Approx(3.3772).epsilon(1e-4));
  CHECK(k_alpha(0.0) == Approx(std::pow(kPi, 1.5) / std::sqrt(kE)).epsilon(1e-15));
  CHECK(k_alpha(1.0) == Approx(std::pow(kPi, 1.5) / (2 * std::sqrt(2 * kE))).epsilon(1e-15));
}

TEST_CASE("upper bound on nu_n: gate and value") {
  const ProblemParams params(kPi, -0.75);
  for (int n = 0; n <= 5; ++n) {
    CHECK_FALSE(nu_upper_bound(params, n).has_value());
    CHECK_FALSE(log_nu_upper_bound(params, n).has_value());
  }
  REQUIRE(nu_upper_bound(params, 6).has_value());
  const double L = std::log((2 * 20 - 1) / (kE * kPi));
  const double expected = std::exp(kPi) * k_alpha(-0.75) / L * std::exp(-19 * L);
  CHECK(*nu_upper_bound(params, 20) == Approx(expected).epsilon(1e-13));
  CHECK(*log_nu_upper_bound(params, 20) == Approx(std::log(expected)).epsilon(1e-13));

  const Spectrum s = build_spectrum(params, 20);
  CHECK(s.nu[20] <= *nu_upper_bound(params, 20));
}

TEST_CASE("upper bound dominates nu_n on the test grid") {
  for (double c : {kPi, 2 * kPi, 3 * kPi}) {
    for (double a : {-0.75, 1.0}) {
      const ProblemParams params(c, a);
      const Spectrum s = build_spectrum(params, 60);
      for (int n = 0; n <= 60; ++n) {
        const auto lb = log_nu_upper_bound(params, n);
        CHECK(lb.has_value() == (n > kE * c / 2 + 1));
        if (lb) {
          CAPTURE(c);
          CAPTURE(a);
          CAPTURE(n);
          CHECK(s.log_nu[n] + std::log(10.0) < *lb);
        }
      }
    }
  }
}

TEST_CASE("lower bound on nu_0") {
  const double K = std::sqrt(2 / kPi) * 0.25 / std::sqrt(0.75);
  CHECK(K == Approx(0.23033).epsilon(1e-4));
  CHECK(nu0_lower_bound(ProblemParams(2.0, 0.0), 0.5) == Approx(K * std::exp(0.5)).epsilon(1e-14));
  CHECK(nu0_lower_bound(ProblemParams(2.0, 1.0), 1e-9) ==
        Approx(std::sqrt(2 / kPi) / 2.0).epsilon(1e-6));

  CHECK_THROWS_AS(nu0_lower_bound(ProblemParams(1.0, -0.5), 0.5), DomainError);
  CHECK_THROWS_AS(nu0_lower_bound(ProblemParams(1.0, 0.0), 0.0), DomainError);
  CHECK_THROWS_AS(nu0_lower_bound(ProblemParams(1.0, 0.0), 1.0), DomainError);
  CHECK_THROWS_AS(nu0_lower_bound_best(ProblemParams(1.0, -0.75)), DomainError);

  // the (5 pi, 1) table entry dominates the bound on a gamma grid
  const ProblemParams p51(5 * kPi, 1.0);
  for (int i = 1; i < 100; ++i) CHECK(nu0_lower_bound(p51, i / 100.0) <= 1.39132e4);
}

TEST_CASE("best lower bound") {
  double last_gamma = 0.0;
  for (double a : {0.0, 1.0}) {
    last_gamma = 0.0;
    for (int k = 1; k <= 5; ++k) {
      const ProblemParams params(k * kPi, a);
      const BestLowerBound b = nu0_lower_bound_best(params);
      CHECK(b.gamma_star > 0.0);
      CHECK(b.gamma_star < 1.0);
      CHECK(b.bound >= nu0_lower_bound(params, 0.5));
      CHECK(b.bound == Approx(nu0_lower_bound(params, b.gamma_star)).epsilon(1e-14));
      // Brent stops at ~1e-8 in gamma
      for (int i = 1; i < 100; ++i) CHECK(nu0_lower_bound(params, i / 100.0) <= b.bound * (1 + 1e-7));
      CHECK(b.bound <= build_spectrum(params, 0).nu[0]);
      CHECK(b.gamma_star >= last_gamma);
      last_gamma = b.gamma_star;
    }
  }
}

TEST_CASE("coefficient decay bound") {
  const ProblemParams params(kPi, 0.0);
  CHECK(coeff_decay_bound(params, 2.0, 0) == Approx(k_alpha(0.0) / 2.0 * std::exp(kPi) * 2).epsilon(1e-14));
  CHECK(log_coeff_decay_bound(params, std::log(2.0), 7) ==
        Approx(std::log(coeff_decay_bound(params, 2.0, 7))).epsilon(1e-13));
  CHECK_THROWS_AS(coeff_decay_bound(params, 0.0, 1), DomainError);

  const Spectrum s = build_spectrum(params, 0);
  const EigenPair& p = s.pairs[0];
  CHECK(std::fabs(p.coeffs[15]) <= coeff_decay_bound(params, s.nu[0], 30));
  CHECK(p.degree(15) == 30);

  for (const ProblemParams& pr : {ProblemParams(kPi, -0.75), ProblemParams(2 * kPi, 1.0)}) {
    const Spectrum sp = build_spectrum(pr, 10);
    for (int n = 0; n <= 10; ++n) {
      for (std::size_t j = 0; j < sp.pairs[n].coeffs.size(); ++j) {
        const double d = std::fabs(sp.pairs[n].coeffs[j]);
        if (d == 0.0) continue;
        const int k = sp.pairs[n].degree(static_cast<int>(j));
        CHECK(std::log(d) <= log_coeff_decay_bound(pr, sp.log_nu[n], k));
      }
    }
  }
}

TEST_CASE("uniform bound on phi_n") {
  const auto b = phi_sup_bound(4 * kPi * kPi, ProblemParams(kPi, 0.0));
  REQUIRE(b.has_value());
  CHECK(*b == Approx(6 * kPi).epsilon(1e-14));
  CHECK_FALSE(phi_sup_bound(1.9 * kPi * kPi, ProblemParams(kPi, 0.0)).has_value());
  CHECK_FALSE(phi_sup_bound(100.0, ProblemParams(1.0, -0.75)).has_value());
  CHECK_FALSE(phi_sup_bound(1.0, ProblemParams(0.1, 0.0)).has_value());  // chi below 6(a+1)/(a+3)

  const ProblemParams params(kPi, 1.0);
  const Spectrum s = build_spectrum(params, 20);
  const auto bound = phi_sup_bound(s.pairs[20].chi, params);
  REQUIRE(bound.has_value());
  double sup = 0.0;
  int arg = -1;
  for (int i = 0; i <= 200; ++i) {
    const double v = std::fabs(eval_phi(s.pairs[20], -1.0 + 2.0 * i / 200));
    if (v > sup) sup = v, arg = i;
  }
  CHECK(sup <= *bound);
  CHECK((arg == 0 || arg == 200));
}

TEST_CASE("local estimate") {
  const ProblemParams params(kPi, 1.0);
  const Spectrum s = build_spectrum(params, 30);
  const BoundReport r = local_estimate_check(s.pairs[30], params);
  CHECK(r.applicable);
  CHECK(r.satisfied);
  CHECK(r.rhs == 2.0);
  CHECK(r.n == 30);
  CHECK(r.lhs <= 2.0);
  CHECK(r.lhs > 0.0);

  // negative chi is outside the hypothesis
  CHECK_FALSE(local_estimate_check(s.pairs[0], params).applicable);
  // alpha > 0 needs q <= alpha / 2
  const ProblemParams half(2 * kPi, 0.5);
  const Spectrum h = build_spectrum(half, 12);
  for (int n = 0; n <= 12; ++n) {
    const double q = half.c() * half.c() / h.pairs[n].chi;
    CHECK(local_estimate_check(h.pairs[n], half).applicable == (q >= 0 && q <= 0.25));
  }
}

TEST_CASE("local estimate fails for alpha = -3/4 already as c -> 0") {
  // phi_2 tends to the normalized Gegenbauer polynomial C_2^l(x) = 2 l (l+1) x^2 - l,
  // l = alpha + 1/2; at t = 0 the estimated quantity is C_2(0)^2 / ||C_2||^2.
  const double a = -0.75, l = a + 0.5;
  const double p = 2 * l * (l + 1), q = -l;
  const auto m = [&](double j) { return boost::math::beta(j + 0.5, a + 1); };
  const double norm2 = p * p * m(2) + 2 * p * q * m(1) + q * q * m(0);
  const double at_zero = q * q / norm2;
  CHECK(at_zero > 1 + a);

  const ProblemParams params(1e-6, a);
  const Spectrum s = build_spectrum(params, 2);
  const BoundReport r = local_estimate_check(s.pairs[2], params);
  CHECK(r.applicable);
  CHECK_FALSE(r.satisfied);
  CHECK(r.lhs == Approx(at_zero).epsilon(1e-9));
}

TEST_CASE("approximation error bounds") {
  CHECK_FALSE(approx_error_bounds(ProblemParams(5 * kPi, 0.0), 16, 1.0).has_value());
  CHECK_FALSE(approx_error_bounds(ProblemParams(1.0, -0.75), 10, 1.0).has_value());
  const ProblemParams params(5 * kPi, 0.0);
  double last = INFINITY;
  for (int n = 22; n <= 60; ++n) {
    const auto b = approx_error_bounds(params, n, 1.0);
    REQUIRE(b.has_value());
    CHECK(b->l2_bound < last);
    CHECK(b->sup_bound_shape > 0.0);
    last = b->l2_bound;
  }

  // dominance against the computed projection error of g = L f, f = e^{3t} sin(5 pi t)
  const TestPair tp = test_pair(5 * kPi, 3.0, 5 * kPi);
  const QuadRule rule = gauss_jacobi_rule(0.0, 400);
  const double fnorm = std::sqrt(inner_product(tp.f, tp.f, rule));
  const Spectrum s = build_spectrum(params, 40);
  const ExpansionSeries bg = forward_coeffs(expand(tp.f, s, rule, 41), s);
  for (int n : {22, 28, 34, 40}) {
    const GridEvaluator sn = [&](std::span<const double> xs) { return project(bg, s, n, xs); };
    const ErrorMetrics e = measure_errors(tp.g, sn, rule, 201);
    CAPTURE(n);
    CHECK(e.l2 <= approx_error_bounds(params, n, fnorm)->l2_bound);
  }
}
