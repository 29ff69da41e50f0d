#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace mixprior {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)), exact for -inf operands.
inline double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  return a > b ? a + std::log1p(std::exp(b - a)) : b + std::log1p(std::exp(a - b));
}

// log(sum_i exp(x_i)) in the order given. Returns -inf for an empty range.
double log_sum_exp(std::span<const double> xs);

// Streaming log-sum-exp. Terms are combined in the order they are added, so a
// fixed insertion order gives bit-stable results.
class LogSumAccumulator {
 public:
  void add(double log_term) { value_ = log_add(value_, log_term); }
  double log_value() const { return value_; }

 private:
  double value_ = kNegInf;
};

// Sum of real terms given as (sign, log|term|). Positive and negative parts are
// accumulated separately in log space and combined once at the end.
class SignedLogSum {
 public:
  void add(double log_magnitude, bool negative) {
    (negative ? neg_ : pos_).add(log_magnitude);
  }
  void add_value(double x) {
    if (x != 0.0) add(std::log(std::fabs(x)), x < 0.0);
  }
  double value() const { return std::exp(pos_.log_value()) - std::exp(neg_.log_value()); }

  // ln|sum| and its sign, without leaving log space.
  bool negative() const { return neg_.log_value() > pos_.log_value(); }
  double log_magnitude() const {
    const double p = pos_.log_value();
    const double n = neg_.log_value();
    if (n == kNegInf) return p;
    if (p == kNegInf) return n;
    if (p == n) return kNegInf;
    return p > n ? p + std::log1p(-std::exp(n - p)) : n + std::log1p(-std::exp(p - n));
  }

 private:
  LogSumAccumulator pos_;
  LogSumAccumulator neg_;
};

// ln Gamma for positive arguments.
inline double log_gamma(double x) { return std::lgamma(x); }

// ln n!
inline double log_factorial(long long n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// ln B(a, b)
inline double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace mixprior
