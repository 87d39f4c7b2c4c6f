#include "laperfect/word.hpp"

#include <bit>
#include <stdexcept>

namespace laperfect {

bool is_power_of_two(unsigned n) { return n != 0 && std::has_single_bit(n); }

unsigned log2_length(unsigned n) {
  if (!is_power_of_two(n) || n > kMaxLength) {
    throw std::invalid_argument("word length " + std::to_string(n) + " is not a power of two <= 64");
  }
  return static_cast<unsigned>(std::countr_zero(n));
}

Bits fold_rows(Bits x, unsigned n, unsigned width) {
  const Bits mask = low_mask(width);
  Bits acc = 0;
  for (unsigned shift = 0; shift < n; shift += width) acc ^= (x >> shift) & mask;
  return acc;
}

ArrayView::ArrayView(unsigned n, unsigned t) {
  const unsigned m = log2_length(n);
  if (t > m) throw std::invalid_argument("array level out of range");
  rows_ = 1u << t;
  columns_ = 1u << (m - t);
}

Word::Word(unsigned length, Bits bits) : length_(length), bits_(bits) {
  if (length == 0 || length > kMaxLength) {
    throw std::invalid_argument("word length must be in 1..64");
  }
  if ((bits & ~low_mask(length)) != 0) {
    throw std::invalid_argument("word bits exceed length");
  }
}

Word Word::from_support(unsigned length, std::initializer_list<unsigned> support) {
  return from_support(length, std::span<const unsigned>(support.begin(), support.size()));
}

Word Word::from_support(unsigned length, std::span<const unsigned> support) {
  Word w(length, 0);
  for (unsigned k : support) {
    if (k >= length) throw std::invalid_argument("support coordinate out of range");
    w.bits_ |= coordinate_bit(length, k);
  }
  return w;
}

Word Word::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxLength) {
    throw std::invalid_argument("binary word must have 1..64 characters");
  }
  Bits bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("binary word contains a non-binary character");
    bits = (bits << 1) | static_cast<Bits>(c == '1');
  }
  return Word(static_cast<unsigned>(text.size()), bits);
}

Word Word::flipped(unsigned k) const {
  if (k >= length_) throw std::invalid_argument("coordinate out of range");
  return Word(length_, bits_ ^ coordinate_bit(length_, k));
}

std::vector<unsigned> Word::support() const {
  std::vector<unsigned> out;
  for (unsigned k = 0; k < length_; ++k) {
    if ((*this)[k]) out.push_back(k);
  }
  return out;
}

std::string Word::to_string() const {
  std::string s(length_, '0');
  for (unsigned k = 0; k < length_; ++k) {
    if ((*this)[k]) s[k] = '1';
  }
  return s;
}

unsigned weight(const Word& w) { return static_cast<unsigned>(std::popcount(w.bits())); }

static void require_same_length(const Word& a, const Word& b) {
  if (a.length() != b.length()) throw std::invalid_argument("word length mismatch");
}

unsigned distance(const Word& a, const Word& b) {
  require_same_length(a, b);
  return static_cast<unsigned>(std::popcount(a.bits() ^ b.bits()));
}

Word add(const Word& a, const Word& b) {
  require_same_length(a, b);
  return Word(a.length(), a.bits() ^ b.bits());
}

Parity parity(const Word& w) { return weight(w) % 2 == 0 ? Parity::Even : Parity::Odd; }

Word parity_check(const Word& w, unsigned t) {
  const unsigned m = log2_length(w.length());
  if (t < 1 || t > m) throw std::invalid_argument("parity check level out of range");
  const unsigned width = 1u << (m - t);
  return Word(width, fold_rows(w.bits(), w.length(), width));
}

}  // namespace laperfect
