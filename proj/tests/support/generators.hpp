#pragma once

// Hand-rolled random generators for the property tests. Every property runs
// over a fixed list of seeds so failures reproduce exactly.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "laperfect/code_set.hpp"
#include "laperfect/isometry.hpp"
#include "laperfect/random.hpp"
#include "laperfect/word.hpp"

namespace laperfect::testing {

inline Word random_word(unsigned n, Rng& rng) { return Word(n, rng() & low_mask(n)); }

inline Word random_even_word(unsigned n, Rng& rng) {
  Bits w = rng() & low_mask(n);
  if (std::popcount(w) % 2) w ^= 1;
  return Word(n, w);
}

inline Word random_odd_word(unsigned n, Rng& rng) { return Word(n, random_even_word(n, rng).bits() ^ 1); }

inline std::vector<unsigned> random_permutation(unsigned n, Rng& rng) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  shuffle(std::span(perm), rng);
  return perm;
}

inline Isometry random_isometry(unsigned n, Rng& rng) { return Isometry(random_permutation(n, rng), random_word(n, rng)); }

inline CodeSet random_even_set(unsigned n, std::size_t size, Rng& rng) {
  std::vector<Bits> words;
  for (std::size_t i = 0; i < size; ++i) words.push_back(random_even_word(n, rng).bits());
  return CodeSet(n, std::move(words));
}

/// Seeds used by every property loop.
inline std::vector<std::uint64_t> seeds(std::size_t count) {
  std::vector<std::uint64_t> out(count);
  std::iota(out.begin(), out.end(), std::uint64_t{1000});
  return out;
}

/// Straightforward Omega(S), kept independent of the library version.
inline std::vector<Bits> oracle_neighborhood(const CodeSet& s) {
  std::vector<Bits> out;
  for (Bits w : s.raw()) {
    for (unsigned k = 0; k < s.length(); ++k) out.push_back(w ^ (Bits{1} << k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace laperfect::testing
