#include "laperfect/components.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "laperfect/gf2.hpp"
#include "laperfect/scaffold.hpp"

namespace laperfect {

bool AffineSubspace::contains(const Word& w) const {
  if (w.length() != offset.length()) throw std::invalid_argument("word length mismatch");
  Gf2Basis b;
  for (const Word& row : basis) b.insert(row.bits());
  return b.contains(w.bits() ^ offset.bits());
}

AffineSubspace affine_span(std::span<const Bits> words, unsigned n) {
  if (words.empty()) throw std::invalid_argument("affine span of an empty set");
  const Bits base = words.front();
  Gf2Basis basis;
  for (Bits w : words) {
    // Cheap once the span is full; reduce is dimension-bounded.
    if (basis.dimension() == n) break;
    basis.insert(w ^ base);
  }
  AffineSubspace out{Word(n, basis.reduce(base)), {}};
  for (Bits row : basis.rows()) out.basis.emplace_back(n, row);
  return out;
}

AffineSubspace affine_span(const CodeSet& set) { return affine_span(set.raw(), set.length()); }

bool is_component(const CodeSet& set, unsigned t) {
  const unsigned n = set.length();
  if (!set.all_even()) throw std::invalid_argument("component candidate has an odd member");
  const unsigned dim = a_basis(n, t).dimension();
  if (set.size() != (std::size_t{1} << dim)) return false;
  WordBitmap hit(n, Parity::Odd);
  for (Bits w : set.raw()) {
    for (unsigned k = 0; k < n; ++k) {
      const Bits x = w ^ coordinate_bit(n, k);
      if (hit.set(x) || !omega_a_member_bits(x, n, t)) return false;
    }
  }
  return true;
}

bool is_mu_component(const CodeSet& set, unsigned t, const Word& mu) {
  const unsigned n = set.length();
  if (mu.length() != n) throw std::invalid_argument("mu length mismatch");
  const unsigned width = n >> t;
  if ((mu.bits() & low_mask(n - width)) != 0) {
    throw std::invalid_argument("mu must be supported on the first 2^{m-t} coordinates");
  }
  const CodeSet shifted = set.translated(mu.bits());
  return shifted.all_even() && is_component(shifted, t);
}

bool is_bold(const CodeSet& set, unsigned t) {
  if (!is_component(set, t)) throw std::invalid_argument("is_bold needs a component of the given order");
  const unsigned n = set.length();
  const AffineSubspace span = affine_span(set);
  if (span.offset.bits() != 0 || span.dimension() != b_dimension(n, t)) return false;
  return std::all_of(span.basis.begin(), span.basis.end(), [&](const Word& w) { return b_member_bits(w.bits(), n, t); });
}

bool is_degenerate(std::span<const Isometry> collection, std::span<const Word> subspace) {
  if (collection.size() != subspace.size() || collection.empty()) {
    throw std::invalid_argument("collection is not indexed by the subspace");
  }
  std::unordered_map<Bits, std::size_t> index;
  for (std::size_t i = 0; i < subspace.size(); ++i) index.emplace(subspace[i].bits(), i);
  const auto zero = index.find(0);
  if (!std::has_single_bit(subspace.size()) || index.size() != subspace.size() || zero == index.end()) {
    throw std::invalid_argument("index set is not a linear subspace");
  }
  for (const Isometry& g : collection) {
    if (!g.same_permutation(collection.front())) return false;
  }

  // Extend f(0) = v_0 affinely along a greedy basis and compare.
  const Bits v0 = collection[zero->second].shift_bits();
  std::unordered_map<Bits, Bits> predicted{{0, v0}};
  Gf2Basis basis;
  for (const Word& r : subspace) {
    if (!basis.insert(r.bits())) continue;
    const Bits step = collection[index.at(r.bits())].shift_bits() ^ v0;
    std::vector<std::pair<Bits, Bits>> grown;
    for (const auto& [x, v] : predicted) grown.emplace_back(x ^ r.bits(), v ^ step);
    for (const auto& entry : grown) predicted.insert(entry);
  }
  if (predicted.size() != subspace.size()) throw std::invalid_argument("index set is not a linear subspace");
  for (const auto& [x, v] : predicted) {
    const auto it = index.find(x);
    if (it == index.end()) throw std::invalid_argument("index set is not a linear subspace");
    if (collection[it->second].shift_bits() != v) return false;
  }
  return true;
}

}  // namespace laperfect
