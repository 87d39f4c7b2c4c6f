#include "laperfect/gf2.hpp"

#include <algorithm>
#include <bit>

namespace laperfect {

namespace {
Bits pivot(Bits row) { return Bits{1} << (63 - std::countl_zero(row)); }
}  // namespace

Bits Gf2Basis::reduce(Bits v) const {
  for (Bits row : rows_) {
    if (v & pivot(row)) v ^= row;
  }
  return v;
}

bool Gf2Basis::insert(Bits v) {
  v = reduce(v);
  if (v == 0) return false;
  const Bits p = pivot(v);
  for (Bits& row : rows_) {
    if (row & p) row ^= v;
  }
  rows_.push_back(v);
  std::sort(rows_.begin(), rows_.end(), std::greater<>());
  return true;
}

}  // namespace laperfect
