#pragma once

#include <span>
#include <vector>

#include "laperfect/code_set.hpp"
#include "laperfect/isometry.hpp"
#include "laperfect/word.hpp"

namespace laperfect {

/// offset + span(basis). Canonical: offset is the least element and the
/// basis is fully reduced (descending pivots).
struct AffineSubspace {
  Word offset;
  std::vector<Word> basis;

  unsigned dimension() const { return static_cast<unsigned>(basis.size()); }
  bool contains(const Word& w) const;

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;
};

/// Smallest affine subspace containing the set. Throws on an empty set.
AffineSubspace affine_span(const CodeSet& set);
AffineSubspace affine_span(std::span<const Bits> words, unsigned n);

/// |G| = |A^t| and Omega(G) = Omega(A^t). Exact for n <= 32: the
/// neighborhoods are marked in an odd-word bitmap; with the sizes equal,
/// equality holds iff no odd word is hit twice and every hit satisfies the
/// closed form of Omega(A^t). Throws on an odd member.
bool is_component(const CodeSet& set, unsigned t);

/// is_component(M + mu, t). Throws unless mu is supported on the first
/// 2^{m-t} coordinates; false when M + mu has an odd member.
bool is_mu_component(const CodeSet& set, unsigned t, const Word& mu);

/// affine_span(G) == B^t. Throws unless G is a component of order t.
bool is_bold(const CodeSet& set, unsigned t);

/// The collection r -> g_r (g_r indexed like `subspace`) is degenerate: all
/// permutations agree and r -> shift(g_r) is an affine map on the linear
/// subspace enumerated by `subspace`. Throws if the sizes differ or
/// `subspace` is not a linear subspace.
bool is_degenerate(std::span<const Isometry> collection, std::span<const Word> subspace);

}  // namespace laperfect
