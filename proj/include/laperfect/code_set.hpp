#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "laperfect/word.hpp"

namespace laperfect {

/// A set of equal-length words stored as a sorted, duplicate-free list of
/// raw encodings.
class CodeSet {
 public:
  CodeSet() = default;
  explicit CodeSet(unsigned length) : length_(length) {}
  /// Sorts and removes duplicates.
  CodeSet(unsigned length, std::vector<Bits> words);

  static CodeSet from_words(std::span<const Word> words);

  unsigned length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(Bits w) const;
  bool contains(const Word& w) const;

  std::span<const Bits> raw() const { return words_; }
  Word word(std::size_t i) const { return Word(length_, words_[i]); }
  std::vector<Word> words() const;

  /// The set {c + v : c in C}.
  CodeSet translated(Bits v) const;
  bool all_even() const;

  friend bool operator==(const CodeSet&, const CodeSet&) = default;

 private:
  unsigned length_ = 0;
  std::vector<Bits> words_;
};

/// One bit per word of F^n, or per word of one parity class (indexed by
/// the encoding with the last coordinate dropped). The latter halves the
/// footprint, which is what makes n = 32 fit.
class WordBitmap {
 public:
  explicit WordBitmap(unsigned length, std::optional<Parity> parity_class = std::nullopt);

  unsigned length() const { return length_; }
  std::optional<Parity> parity_class() const { return parity_class_; }
  std::size_t capacity() const { return bits_; }

  bool test(Bits w) const;
  /// Sets the bit and returns its previous value.
  bool set(Bits w);
  std::size_t count() const;

  static WordBitmap of(const CodeSet& set);

 private:
  std::size_t index(Bits w) const;

  unsigned length_;
  std::optional<Parity> parity_class_;
  std::size_t bits_;
  std::vector<std::uint64_t> data_;
};

/// Omega(S): all words at distance exactly 1 from some element of S.
CodeSet neighborhood(const CodeSet& set);

/// Every word of F^n satisfying the predicate, in ascending order. Small n only.
template <typename Predicate>
CodeSet scan_space(unsigned n, Predicate&& keep) {
  std::vector<Bits> out;
  const Bits end = Bits{1} << n;
  for (Bits x = 0; x < end; ++x) {
    if (keep(x)) out.push_back(x);
  }
  return CodeSet(n, std::move(out));
}

/// Throws unless 2^n words can be scanned cheaply (n <= 24).
void require_scannable(unsigned n);

}  // namespace laperfect
