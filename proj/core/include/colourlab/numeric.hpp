#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace colourlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Table of ln(j!) for j = 0..n.
std::vector<double> log_factorials(std::size_t n);

/// ln C(a, 2) pairs helper: a*(a-1)/2 as an exact integer.
constexpr std::int64_t pairs(std::int64_t a) { return a * (a - 1) / 2; }

BigInt binomial(std::int64_t n, std::int64_t r);

/// n! / prod(parts_i!) for parts summing to n.
BigInt multinomial(const std::vector<std::int64_t>& parts);

/// Natural log of a positive big integer (accurate to double precision).
double log_big(const BigInt& x);

/// Streaming log-sum-exp with deterministic accumulation order.
class LogSum {
 public:
  void add(double log_term);
  double value() const;  ///< -inf when nothing positive was added
  bool empty() const { return !seen_; }

 private:
  double max_ = 0.0;
  double sum_ = 0.0;
  bool seen_ = false;
};

}  // namespace colourlab
