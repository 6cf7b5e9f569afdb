#include "colourlab/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>

#include "colourlab/errors.hpp"

namespace colourlab {

std::vector<double> log_factorials(std::size_t n) {
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t j = 2; j <= n; ++j) out[j] = out[j - 1] + std::log(static_cast<double>(j));
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (std::int64_t j = 1; j <= r; ++j) {
    out *= (n - r + j);
    out /= j;
  }
  return out;
}

BigInt multinomial(const std::vector<std::int64_t>& parts) {
  BigInt out = 1;
  std::int64_t total = 0;
  for (const auto p : parts) {
    if (p < 0) throw InvalidParameter("multinomial: negative part");
    total += p;
    out *= binomial(total, p);
  }
  return out;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw DomainError("log_big: argument must be positive");
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 900) return std::log(x.convert_to<double>());
  // cpp_bin_float keeps a wide exponent, so the conversion cannot overflow
  const boost::multiprecision::cpp_bin_float_50 wide(x);
  return static_cast<double>(boost::multiprecision::log(wide));
}

void LogSum::add(double log_term) {
  if (log_term == -std::numeric_limits<double>::infinity()) return;
  if (!seen_) {
    max_ = log_term;
    sum_ = 1.0;
    seen_ = true;
  } else if (log_term <= max_) {
    sum_ += std::exp(log_term - max_);
  } else {
    sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
    max_ = log_term;
  }
}

double LogSum::value() const {
  if (!seen_) return -std::numeric_limits<double>::infinity();
  return max_ + std::log(sum_);
}

}  // namespace colourlab
