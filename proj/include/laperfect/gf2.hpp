#pragma once

#include <vector>

#include "laperfect/word.hpp"

namespace laperfect {

/// Fully reduced row-echelon basis of a GF(2) subspace of F^n, with the
/// pivot of each row being its highest set bit.
class Gf2Basis {
 public:
  /// Adds `v` to the span. Returns false when it was already dependent.
  bool insert(Bits v);
  /// Minimum element of the coset v + span.
  Bits reduce(Bits v) const;
  bool contains(Bits v) const { return reduce(v) == 0; }
  unsigned dimension() const { return static_cast<unsigned>(rows_.size()); }
  /// Rows ordered by decreasing pivot.
  const std::vector<Bits>& rows() const { return rows_; }

  friend bool operator==(const Gf2Basis&, const Gf2Basis&) = default;

 private:
  std::vector<Bits> rows_;
};

}  // namespace laperfect
