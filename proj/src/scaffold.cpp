#include "laperfect/scaffold.hpp"

#include <bit>
#include <stdexcept>

namespace laperfect {

namespace {

void require_level(unsigned n, unsigned t) {
  const unsigned m = log2_length(n);
  if (m < 2) throw std::invalid_argument("scaffold sets need n >= 4");
  if (t < 1 || t > m - 1) throw std::invalid_argument("level t out of range 1..m-1");
}

unsigned column_count(unsigned n, unsigned t) { return n >> t; }

// Bits of the even-indexed rows at level t.
Bits even_rows_mask(unsigned n, unsigned t) {
  const unsigned width = column_count(n, t);
  Bits mask = 0;
  for (unsigned row = 0; row < (1u << t); row += 2) {
    mask |= low_mask(width) << (n - (row + 1) * width);
  }
  return mask;
}

Bits stack_first_rows(Bits v, unsigned n, unsigned width) {
  return (v << (n - width)) | (v << (n - 2 * width));
}

}  // namespace

std::size_t v_size(unsigned n, unsigned t) {
  require_level(n, t);
  const unsigned width = column_count(n, t);
  if (width - 1 >= 64) throw std::invalid_argument("|V^t| does not fit 64 bits");
  return std::size_t{1} << (width - 1);
}

Word v_element(unsigned n, unsigned t, std::size_t index) {
  if (index >= v_size(n, t)) throw std::invalid_argument("V^t index out of range");
  const unsigned width = column_count(n, t);
  // The even words of a fixed length, ascending, are 2i + parity(i).
  const Bits v = (Bits{index} << 1) | static_cast<Bits>(std::popcount(index) & 1);
  return Word(n, stack_first_rows(v, n, width));
}

std::vector<Word> v_set(unsigned n, unsigned t) {
  const std::size_t size = v_size(n, t);
  std::vector<Word> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) out.push_back(v_element(n, t, i));
  return out;
}

bool v_member(const Word& w, unsigned t) {
  const unsigned n = w.length();
  require_level(n, t);
  const unsigned width = column_count(n, t);
  const Bits v = (w.bits() >> (n - width)) & low_mask(width);
  return std::popcount(v) % 2 == 0 && w.bits() == stack_first_rows(v, n, width);
}

Gf2Basis a_basis(unsigned n, unsigned t) {
  require_level(n, t);
  Gf2Basis basis;
  for (unsigned level = 1; level <= t; ++level) {
    const unsigned width = column_count(n, level);
    for (unsigned j = 1; j < width; ++j) {
      const Bits v = coordinate_bit(width, 0) | coordinate_bit(width, j);
      basis.insert(stack_first_rows(v, n, width));
    }
  }
  return basis;
}

bool a_member(const Word& w, unsigned t) { return a_basis(w.length(), t).contains(w.bits()); }

CodeSet a_enumerate(unsigned n, unsigned t) {
  require_level(n, t);
  CodeSet current = CodeSet::from_words(v_set(n, 1));
  for (unsigned level = 2; level <= t; ++level) {
    std::vector<Bits> next;
    for (const Word& r : v_set(n, level)) {
      for (Bits a : current.raw()) next.push_back(r.bits() ^ a);
    }
    current = CodeSet(n, std::move(next));
  }
  return current;
}

CodeSet hamming_code(unsigned n) { return a_enumerate(n, log2_length(n) - 1); }

CodeSet theta(const CodeSet& set) {
  const unsigned n = set.length();
  require_scannable(n);
  if (!set.all_even()) throw std::invalid_argument("theta requires an even-weight set");
  WordBitmap omega(n);
  for (Bits w : set.raw()) {
    for (unsigned k = 0; k < n; ++k) omega.set(w ^ coordinate_bit(n, k));
  }
  return scan_space(n, [&](Bits x) {
    if (std::popcount(x) % 2 != 0) return false;
    for (unsigned k = 0; k < n; ++k) {
      if (!omega.test(x ^ coordinate_bit(n, k))) return false;
    }
    return true;
  });
}

bool theta_a_member_bits(Bits w, unsigned n, unsigned t) {
  const unsigned m = log2_length(n);
  if (t == m - 1) return std::popcount(w) % 2 == 0;
  return fold_rows(w, n, column_count(n, t)) == 0;
}

bool omega_a_member_bits(Bits w, unsigned n, unsigned t) {
  return std::popcount(fold_rows(w, n, column_count(n, t))) == 1;
}

bool b_member_bits(Bits w, unsigned n, unsigned t) {
  if (t == 1) return v_member(Word(n, w), 1);
  return fold_rows(w, n, column_count(n, t)) == 0 && std::popcount(w & even_rows_mask(n, t)) % 2 == 0;
}

bool theta_a_member(const Word& w, unsigned t) {
  require_level(w.length(), t);
  return theta_a_member_bits(w.bits(), w.length(), t);
}

bool omega_a_member(const Word& w, unsigned t) {
  require_level(w.length(), t);
  return omega_a_member_bits(w.bits(), w.length(), t);
}

bool b_member(const Word& w, unsigned t) {
  require_level(w.length(), t);
  return b_member_bits(w.bits(), w.length(), t);
}

unsigned b_dimension(unsigned n, unsigned t) {
  require_level(n, t);
  return column_count(n, t) * ((1u << t) - 1) - 1;
}

CodeSet b_enumerate(unsigned n, unsigned t) {
  require_level(n, t);
  require_scannable(n);
  return scan_space(n, [&](Bits x) { return b_member_bits(x, n, t); });
}

CodeSet sumset(const CodeSet& a, const CodeSet& b) {
  if (a.length() != b.length()) throw std::invalid_argument("sumset length mismatch");
  std::vector<Bits> out;
  out.reserve(a.size() * b.size());
  for (Bits x : a.raw()) {
    for (Bits y : b.raw()) out.push_back(x ^ y);
  }
  return CodeSet(a.length(), std::move(out));
}

CodeSet b_definitional(unsigned n, unsigned t) {
  require_level(n, t);
  const CodeSet v = CodeSet::from_words(v_set(n, t));
  if (t == 1) return v;
  return sumset(v, theta(a_enumerate(n, t - 1)));
}

}  // namespace laperfect
