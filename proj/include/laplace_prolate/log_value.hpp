#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace laplace_prolate {

/// A real number stored as sign * exp(log_abs).
///
/// Products of Gamma, Beta, powers of two and Bessel values overflow double
/// range long before the quantities built from them do, so those products are
/// carried in this form and only materialized at the final summation.
struct LogValue {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static LogValue zero() { return {}; }
  static LogValue one() { return {0.0, 1}; }

  static LogValue from_log(double log_abs, int sign = 1) {
    if (sign == 0) return zero();
    return {log_abs, sign > 0 ? 1 : -1};
  }

  static LogValue from_double(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::fabs(v)), v > 0.0 ? 1 : -1};
  }

  bool is_zero() const { return sign == 0; }

  /// Linear value; underflows to (signed) zero and overflows to infinity.
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  double log10_abs() const { return log_abs / std::log(10.0); }

  LogValue operator-() const { return {log_abs, -sign}; }

  friend LogValue operator*(LogValue a, LogValue b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.log_abs + b.log_abs, a.sign * b.sign};
  }

  friend LogValue operator/(LogValue a, LogValue b) {
    if (b.sign == 0) {
      return {std::numeric_limits<double>::infinity(), a.sign == 0 ? 1 : a.sign};
    }
    if (a.sign == 0) return zero();
    return {a.log_abs - b.log_abs, a.sign * b.sign};
  }

  LogValue pow(double p) const {
    if (sign == 0) return zero();
    return {log_abs * p, 1};
  }
};

/// Sum of log-space terms: every term is rescaled by the largest magnitude and
/// accumulated with Neumaier compensation. When `condition` is non-null it
/// receives sum|t| / |sum t| (infinity for an exact zero sum).
inline LogValue log_sum(std::span<const LogValue> terms, double* condition = nullptr) {
  double scale = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) {
    if (t.sign != 0) scale = std::max(scale, t.log_abs);
  }
  if (!std::isfinite(scale)) {
    if (condition) *condition = 1.0;
    return LogValue::zero();
  }
  double sum = 0.0, comp = 0.0, abs_sum = 0.0;
  for (const auto& t : terms) {
    if (t.sign == 0) continue;
    const double v = t.sign * std::exp(t.log_abs - scale);
    abs_sum += std::fabs(v);
    const double s = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      comp += (sum - s) + v;
    } else {
      comp += (v - s) + sum;
    }
    sum = s;
  }
  sum += comp;
  if (condition) {
    *condition = sum == 0.0 ? std::numeric_limits<double>::infinity() : abs_sum / std::fabs(sum);
  }
  if (sum == 0.0) return LogValue::zero();
  return {scale + std::log(std::fabs(sum)), sum > 0.0 ? 1 : -1};
}

}  // namespace laplace_prolate
