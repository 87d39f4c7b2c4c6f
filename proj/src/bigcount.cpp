#include "laperfect/bigcount.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace laperfect {

std::string LogValue::power_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "2^%.2f", log2);
  return buf;
}

LogValue log2_of(const BigCount& value) {
  if (sgn(value) <= 0) throw std::domain_error("log2 of a nonpositive count");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return {static_cast<double>(exponent) + std::log2(mantissa)};
}

BigCount factorial(unsigned long k) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigCount binomial(unsigned long n, unsigned long k) {
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigCount power(const BigCount& base, unsigned long exponent) {
  BigCount r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigCount power_of_two(unsigned long exponent) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

}  // namespace laperfect
