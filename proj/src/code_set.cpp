#include "laperfect/code_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace laperfect {

CodeSet::CodeSet(unsigned length, std::vector<Bits> words) : length_(length), words_(std::move(words)) {
  if (length == 0 || length > kMaxLength) throw std::invalid_argument("code length must be in 1..64");
  const Bits mask = low_mask(length);
  for (Bits w : words_) {
    if ((w & ~mask) != 0) throw std::invalid_argument("codeword exceeds code length");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

CodeSet CodeSet::from_words(std::span<const Word> words) {
  if (words.empty()) throw std::invalid_argument("cannot infer length of an empty word list");
  std::vector<Bits> raw;
  raw.reserve(words.size());
  for (const Word& w : words) {
    if (w.length() != words.front().length()) throw std::invalid_argument("word length mismatch");
    raw.push_back(w.bits());
  }
  return CodeSet(words.front().length(), std::move(raw));
}

bool CodeSet::contains(Bits w) const { return std::binary_search(words_.begin(), words_.end(), w); }

bool CodeSet::contains(const Word& w) const {
  if (w.length() != length_) throw std::invalid_argument("word length mismatch");
  return contains(w.bits());
}

std::vector<Word> CodeSet::words() const {
  std::vector<Word> out;
  out.reserve(words_.size());
  for (Bits w : words_) out.emplace_back(length_, w);
  return out;
}

CodeSet CodeSet::translated(Bits v) const {
  std::vector<Bits> out(words_);
  for (Bits& w : out) w ^= v;
  return CodeSet(length_, std::move(out));
}

bool CodeSet::all_even() const {
  return std::all_of(words_.begin(), words_.end(), [](Bits w) { return std::popcount(w) % 2 == 0; });
}

WordBitmap::WordBitmap(unsigned length, std::optional<Parity> parity_class)
    : length_(length), parity_class_(parity_class) {
  const unsigned index_bits = parity_class ? length - 1 : length;
  if (length == 0 || index_bits > 32) {
    throw std::invalid_argument("bitmap over F^" + std::to_string(length) + " is too large");
  }
  bits_ = std::size_t{1} << index_bits;
  data_.assign((bits_ + 63) / 64, 0);
}

std::size_t WordBitmap::index(Bits w) const {
  if (parity_class_) {
    if ((std::popcount(w) % 2 == 1) != (*parity_class_ == Parity::Odd)) throw std::invalid_argument("word outside the bitmap's parity class");
    return static_cast<std::size_t>(w >> 1);
  }
  return static_cast<std::size_t>(w);
}

bool WordBitmap::test(Bits w) const {
  const std::size_t i = index(w);
  return (data_[i / 64] >> (i % 64)) & 1u;
}

bool WordBitmap::set(Bits w) {
  const std::size_t i = index(w);
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  const bool previous = (data_[i / 64] & bit) != 0;
  data_[i / 64] |= bit;
  return previous;
}

std::size_t WordBitmap::count() const {
  std::size_t total = 0;
  for (std::uint64_t chunk : data_) total += static_cast<std::size_t>(std::popcount(chunk));
  return total;
}

WordBitmap WordBitmap::of(const CodeSet& set) {
  std::optional<Parity> cls;
  if (set.length() > 24 && set.all_even()) cls = Parity::Even;
  WordBitmap bitmap(set.length(), cls);
  for (Bits w : set.raw()) bitmap.set(w);
  return bitmap;
}

CodeSet neighborhood(const CodeSet& set) {
  const unsigned n = set.length();
  std::vector<Bits> out;
  out.reserve(set.size() * n);
  for (Bits w : set.raw()) {
    for (unsigned k = 0; k < n; ++k) out.push_back(w ^ coordinate_bit(n, k));
  }
  return CodeSet(n, std::move(out));
}

void require_scannable(unsigned n) {
  if (n > 24) throw std::invalid_argument("exhaustive scan of F^" + std::to_string(n) + " is out of budget");
}

}  // namespace laperfect
