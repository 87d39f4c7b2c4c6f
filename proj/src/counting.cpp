#include "laperfect/counting.hpp"

#include <cmath>
#include <stdexcept>

#include "laperfect/isometry.hpp"

namespace laperfect {

namespace {

unsigned levels_for_counting(unsigned n) {
  const unsigned m = log2_length(n);
  if (m < 4 || m > 6) throw std::invalid_argument("counting formulas are evaluated for n = 16, 32, 64");
  return m;
}

// log2 |V^i| = 2^{m-i} - 1.
unsigned long log_v(unsigned m, unsigned i) { return (1ul << (m - i)) - 1; }

// |V^{from}| ... |V^{m-1}|, as a machine integer (fits for m <= 6).
unsigned long v_product(unsigned m, unsigned from) {
  unsigned long exponent = 0;
  for (unsigned i = from; i < m; ++i) exponent += log_v(m, i);
  return 1ul << exponent;
}

mpq_class power_q(const mpq_class& base, unsigned long exponent) {
  mpq_class out(power(base.get_num(), exponent), power(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

}  // namespace

BigCount k_la_exact(unsigned n) {
  const unsigned m = levels_for_counting(n);
  BigCount result = d_size(n, m - 1);
  for (unsigned t = 1; t + 2 <= m; ++t) {
    const BigCount d = d_size(n, t);
    const unsigned long v_next = 1ul << log_v(m, t + 1);
    const BigCount base = power(d, v_next) - d * v_next;
    result *= power(base, v_product(m, t + 2));
  }
  return result;
}

BigCount k_la_exact_k_form(unsigned n) {
  levels_for_counting(n);
  mpq_class result(factorial(n), 6 * power(factorial(n / 4), 4));
  result.canonicalize();
  for (unsigned k = 2; k <= n / 4; k *= 2) {
    const unsigned long r = n / k;
    const BigCount c = binomial(k, k / 2);
    const mpq_class two_minus_r(1, power_of_two(r));
    const mpq_class two_minus_half(1, power_of_two(r / 2));
    const mpq_class d = 2 * two_minus_r * mpq_class(power(c, r));
    const mpq_class term = power_q(d, 1ul << (r / 2 - 1)) - mpq_class(power(c, r)) * two_minus_half;
    const unsigned half_log = log2_length(static_cast<unsigned>(r / 2));
    result *= power_q(term, 1ul << (r / 2 - half_log - 1));
  }
  if (result.get_den() != 1) throw std::logic_error("binomial form did not evaluate to an integer");
  return result.get_num();
}

BigCount k_la_upper(unsigned n) {
  const unsigned m = levels_for_counting(n);
  BigCount result = d_size(n, m - 1);
  for (unsigned t = 1; t + 2 <= m; ++t) result *= power(d_size(n, t), v_product(m, t + 1));
  return result;
}

HistoricalBounds historical_bounds(unsigned n) {
  const unsigned m = levels_for_counting(n);
  HistoricalBounds out;
  // 2^{2^{n/2^j - log(n/2^j) - 1}} for n/2^j = n/2, n/4, ..., 2.
  double vasilev = 0;
  for (unsigned j = 1; j < m; ++j) vasilev += std::ldexp(1.0, static_cast<int>((n >> j) - (m - j) - 1));
  out.vasilev.log2 = vasilev;
  out.krotov2000.log2 = std::ldexp(1.0, static_cast<int>(n / 2 - (m - 1) - 1)) +
                        std::ldexp(1.0, static_cast<int>(n / 4 - 1)) * std::log2(3.0) +
                        std::ldexp(1.0, static_cast<int>(n / 4 - (m - 2) - 1));
  auto upper = [](double big_n) {
    return std::exp2(big_n - 1.5 * std::log2(big_n) + std::log2(std::log(std::exp(1.0) * big_n)));
  };
  out.upper_n_minus_1.log2 = upper(n - 1.0);
  out.upper_n.log2 = upper(n);
  return out;
}

NonequivalenceBounds nonequivalence_bounds(unsigned n) {
  const double log_k = log2_of(k_la_exact(n)).log2;
  const double tail = n - 5.0;
  return {{log_k - log2_of(factorial(n)).log2 - tail}, {log_k - log2_of(factorial(n - 1)).log2 - tail}};
}

std::vector<ExpansionFactor> asymptotic_expansion(unsigned n) {
  const unsigned m = levels_for_counting(n);
  std::vector<ExpansionFactor> out;
  for (unsigned t = 1; t + 2 <= m; ++t) {
    const unsigned k = 1u << t;
    const unsigned r = n / k;
    // exponent 2^{n/k - log(n/k) - 1} = |V^{t+1}| ... |V^{m-1}|
    const unsigned e = r - (m - t) - 1;
    const double value = std::ldexp(log2_of(d_size(n, t)).log2, static_cast<int>(e));
    out.push_back({k, {value},
                   "(2*2^-" + std::to_string(r) + "*C(" + std::to_string(k) + "," + std::to_string(k / 2) + ")^" +
                       std::to_string(r) + ")^(2^" + std::to_string(e) + ")"});
  }
  out.push_back({0, log2_of(d_size(n, m - 1)), std::to_string(n) + "!/(6*(" + std::to_string(n / 4) + "!)^4)"});
  return out;
}

BigCount d_size_from_groups(unsigned n, unsigned t) {
  const BigCount a = group_order_a(n, t);
  const BigCount b = group_order_b(n, t);
  if (a % b != 0) throw std::logic_error("|B^t| does not divide |A^t|");
  return a / b;
}

}  // namespace laperfect
