#include "laplace_prolate/specfun.hpp"

#include <math.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "laplace_prolate/errors.hpp"

namespace laplace_prolate {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr int kMaxSeriesTerms = 2000;

void require_alpha(double alpha) {
  if (!(alpha > -1.0)) {
    throw DomainError("alpha must be > -1, got " + std::to_string(alpha));
  }
}

// log(exp(a) + exp(b)) without overflow.
double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

// Sum_{m>=0} t_m with t_0 = 1, t_{m+1} = t_m * q / ((m+1)(m+nu+1)); all terms positive.
double bessel_series(double nu, double q) {
  double term = 1.0;
  double sum = 1.0;
  for (int m = 0; m < kMaxSeriesTerms; ++m) {
    term *= q / ((m + 1.0) * (m + nu + 1.0));
    sum += term;
    if (term < 1e-17 * sum && (m + 1.0) * (m + nu + 1.0) > q) return sum;
  }
  throw NumericError("bessel_i: series did not converge");
}

}  // namespace

JacobiParams::JacobiParams(double alpha) : alpha_(alpha) { require_alpha(alpha); }

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: x must be finite and > 0, got " + std::to_string(x));
  }
  int sign = 0;
  // lgamma_r: std::lgamma writes the global signgam and is not reentrant.
  return ::lgamma_r(x, &sign);
}

LogValue beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError("beta: arguments must be > 0");
  }
  return LogValue::from_log(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

LogValue bessel_i(double nu, double x) { return bessel_i_scaled(nu, x, 0.0); }

LogValue bessel_i_scaled(double nu, double x, double shift) {
  if (!(x > 0.0) || !(nu > -1.0)) {
    throw DomainError("bessel_i: need x > 0 and nu > -1");
  }
  const double half = 0.5 * x;
  const double sum = bessel_series(nu, half * half);
  const double log_value =
      nu * std::log(half) - shift * std::log(x) - log_gamma(nu + 1.0) + std::log(sum);
  return LogValue::from_log(log_value);
}

double kummer_1f1(double a, double b, double z) {
  if (!(a > 0.0) || !(b > a)) {
    throw DomainError("kummer_1f1: need b > a > 0");
  }
  if (z == 0.0) return 1.0;
  if (z < 0.0) {
    // 1F1(a; b; z) = e^z 1F1(b - a; b; -z)
    return std::exp(z) * kummer_1f1(b - a, b, -z);
  }
  double term = 1.0;
  double sum = 1.0;
  for (int m = 0; m < kMaxSeriesTerms; ++m) {
    term *= (a + m) * z / ((b + m) * (m + 1.0));
    sum += term;
    if (term < 1e-17 * sum && m > z) return sum;
  }
  throw NumericError("kummer_1f1: series did not converge");
}

LogValue jacobi_norm(double alpha, int k) {
  require_alpha(alpha);
  if (k < 0) throw DomainError("jacobi_norm: k must be >= 0");
  if (k == 0) {
    // h_0 = 2^{2a+1} B(a+1, a+1); the general formula is 0/0 at alpha = -1/2.
    return LogValue::from_log((2.0 * alpha + 1.0) * kLn2) * beta(alpha + 1.0, alpha + 1.0);
  }
  const double kd = k;
  const double log_h = (2.0 * alpha + 1.0) * kLn2 + 2.0 * log_gamma(kd + alpha + 1.0) -
                       log_gamma(kd + 1.0) - std::log(2.0 * kd + 2.0 * alpha + 1.0) -
                       log_gamma(kd + 2.0 * alpha + 1.0);
  return LogValue::from_log(log_h);
}

double jacobi_recurrence_coeff(double alpha, int k) {
  if (k <= 0) return 0.0;
  if (k == 1) return std::sqrt(1.0 / (2.0 * alpha + 3.0));
  const double kd = k;
  const double s = 2.0 * kd + 2.0 * alpha;
  return std::sqrt(kd * (kd + 2.0 * alpha) / ((s + 1.0) * (s - 1.0)));
}

JacobiRecurrence::JacobiRecurrence(double alpha, int kmax)
    : alpha_(alpha), kmax_(kmax), a_(static_cast<std::size_t>(kmax) + 1, 0.0) {
  require_alpha(alpha);
  if (kmax < 0) throw DomainError("JacobiRecurrence: kmax must be >= 0");
  p0_ = std::exp(-0.5 * jacobi_norm(alpha, 0).log_abs);
  for (int k = 1; k <= kmax; ++k) a_[k] = jacobi_recurrence_coeff(alpha, k);
}

void JacobiRecurrence::evaluate(double x, double* out) const {
  out[0] = p0_;
  if (kmax_ == 0) return;
  out[1] = x * p0_ / a_[1];
  for (int k = 1; k < kmax_; ++k) {
    out[k + 1] = (x * out[k] - a_[k] * out[k - 1]) / a_[k + 1];
  }
}

std::vector<double> jacobi_orthonormal_values(double alpha, int kmax, double x) {
  require_alpha(alpha);
  if (kmax < 0) throw DomainError("jacobi_orthonormal_values: kmax must be >= 0");
  if (!(std::fabs(x) <= 1.0)) {
    throw DomainError("jacobi_orthonormal_values: |x| must be <= 1");
  }
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
  JacobiRecurrence(alpha, kmax).evaluate(x, out.data());
  return out;
}

LogValue jacobi_value_at_one(double alpha, int k) {
  require_alpha(alpha);
  if (k < 0) throw DomainError("jacobi_value_at_one: k must be >= 0");
  const double kd = k;
  const double log_p = log_gamma(kd + alpha + 1.0) - log_gamma(alpha + 1.0) - log_gamma(kd + 1.0);
  return LogValue::from_log(log_p) / jacobi_norm(alpha, k).pow(0.5);
}

JacobiMoments::JacobiMoments(double alpha, int mmax)
    : mmax_(mmax),
      log_mu_(static_cast<std::size_t>(mmax + 1) * (mmax + 1),
              -std::numeric_limits<double>::infinity()) {
  require_alpha(alpha);
  if (mmax < 0) throw DomainError("JacobiMoments: mmax must be >= 0");
  std::vector<double> log_a(static_cast<std::size_t>(mmax) + 2, 0.0);
  for (int k = 1; k <= mmax + 1; ++k) log_a[k] = std::log(jacobi_recurrence_coeff(alpha, k));

  const auto at = [this](int m, int k) -> double& {
    return log_mu_[static_cast<std::size_t>(m) * (mmax_ + 1) + k];
  };
  // <1, p_0> = h_0 * p_0 = sqrt(h_0)
  at(0, 0) = 0.5 * jacobi_norm(alpha, 0).log_abs;
  for (int m = 0; m < mmax; ++m) {
    for (int k = (m + 1) % 2; k <= m + 1; k += 2) {
      double v = -std::numeric_limits<double>::infinity();
      if (k + 1 <= m) v = log_add(v, log_a[k + 1] + at(m, k + 1));
      if (k >= 1) v = log_add(v, log_a[k] + at(m, k - 1));
      at(m + 1, k) = v;
    }
  }
}

}  // namespace laplace_prolate
