#pragma once

#include <gmpxx.h>

#include <string>

namespace laperfect {

/// Exact nonnegative integer for the counting formulas.
using BigCount = mpz_class;

/// A quantity represented by its base-2 logarithm.
struct LogValue {
  double log2 = 0.0;

  /// "2^x" with two decimals.
  std::string power_string() const;

  friend auto operator<=>(const LogValue&, const LogValue&) = default;
};

/// log2 of a positive integer from its bit length and leading 53 bits.
LogValue log2_of(const BigCount& value);

BigCount factorial(unsigned long k);
BigCount binomial(unsigned long n, unsigned long k);
BigCount power(const BigCount& base, unsigned long exponent);
BigCount power_of_two(unsigned long exponent);

}  // namespace laperfect
