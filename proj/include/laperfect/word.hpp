#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace laperfect {

/// Raw word encoding. Coordinate 0 is the most significant of the `n` low
/// bits, so integer order and the order of serialized strings coincide.
using Bits = std::uint64_t;

inline constexpr unsigned kMaxLength = 64;

/// Mask with the low `n` bits set.
constexpr Bits low_mask(unsigned n) {
  return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1;
}

/// Bit holding coordinate `k` of a length-`n` word.
constexpr Bits coordinate_bit(unsigned n, unsigned k) {
  return Bits{1} << (n - 1 - k);
}

/// Returns m with n == 2^m; throws std::invalid_argument otherwise.
unsigned log2_length(unsigned n);

bool is_power_of_two(unsigned n);

/// XOR of the consecutive `width`-bit blocks of a length-`n` word. With
/// width = 2^{m-t} this is the generalized parity check at level t.
Bits fold_rows(Bits x, unsigned n, unsigned width);

/// The 2^t x 2^{m-t} array view of a length-n word.
class ArrayView {
 public:
  ArrayView(unsigned n, unsigned t);

  unsigned rows() const { return rows_; }
  unsigned columns() const { return columns_; }
  unsigned coordinate(unsigned row, unsigned column) const { return row * columns_ + column; }
  unsigned row_of(unsigned k) const { return k / columns_; }
  unsigned column_of(unsigned k) const { return k % columns_; }

 private:
  unsigned rows_;
  unsigned columns_;
};

enum class Parity { Even, Odd };

/// A binary word of length 1..64.
class Word {
 public:
  Word() = default;
  Word(unsigned length, Bits bits);

  static Word zero(unsigned length) { return Word(length, 0); }
  static Word ones(unsigned length) { return Word(length, low_mask(length)); }
  static Word from_support(unsigned length, std::initializer_list<unsigned> support);
  static Word from_support(unsigned length, std::span<const unsigned> support);
  /// Parses a '0'/'1' string, coordinate 0 first.
  static Word parse(std::string_view text);

  unsigned length() const { return length_; }
  Bits bits() const { return bits_; }
  bool operator[](unsigned k) const { return (bits_ & coordinate_bit(length_, k)) != 0; }
  Word flipped(unsigned k) const;
  std::vector<unsigned> support() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  unsigned length_ = 0;
  Bits bits_ = 0;
};

unsigned weight(const Word& w);
unsigned distance(const Word& a, const Word& b);
Word add(const Word& a, const Word& b);
inline Word operator+(const Word& a, const Word& b) { return add(a, b); }
Parity parity(const Word& w);

/// p^t(w): XOR of the 2^t rows of the level-t array view; length 2^{m-t}.
Word parity_check(const Word& w, unsigned t);

}  // namespace laperfect
