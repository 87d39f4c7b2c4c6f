#include "laperfect/isometry.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "laperfect/scaffold.hpp"

namespace laperfect {

namespace {

unsigned levels_of(unsigned n) {
  const unsigned m = log2_length(n);
  if (m < 2) throw std::invalid_argument("isometry groups need n >= 4");
  return m;
}

void require_group_level(unsigned n, unsigned t) {
  const unsigned m = levels_of(n);
  if (t < 1 || t > m - 1) throw std::invalid_argument("group level t out of range 1..m-1");
}

// Class of an even word modulo B^{m-1}, read off its mod-4 fold.
unsigned block_translation_class(Bits even_word, unsigned n) {
  switch (fold_rows(even_word, n, 4)) {
    case 0b0000:
    case 0b1111:
      return 0;
    case 0b1100:
    case 0b0011:
      return 1;
    case 0b1010:
    case 0b0101:
      return 2;
    case 0b0110:
    case 0b1001:
      return 3;
    default:
      throw std::invalid_argument("translation class of an odd word");
  }
}

// Generators of the translation quotient for the block form.
Bits block_translation(unsigned n, unsigned cls) {
  const Bits e1 = coordinate_bit(n, 0) | coordinate_bit(n, 1);
  const Bits e2 = coordinate_bit(n, 0) | coordinate_bit(n, 2);
  switch (cls) {
    case 0:
      return 0;
    case 1:
      return e1;
    case 2:
      return e2;
    default:
      return e1 ^ e2;
  }
}

// e_t: rows 0 and 1 of column 0 at level t.
Bits column_translation(unsigned n, unsigned t) {
  return coordinate_bit(n, 0) | coordinate_bit(n, n >> t);
}

std::vector<unsigned> residue_class(unsigned n, unsigned c) {
  std::vector<unsigned> out;
  for (unsigned k = c; k < n; k += 4) out.push_back(k);
  return out;
}

// Level-t column map of a permutation, or false if some column is broken.
bool column_images(const Isometry& g, const ArrayView& view, std::vector<unsigned>& target) {
  target.assign(view.columns(), 0);
  for (unsigned j = 0; j < view.columns(); ++j) {
    target[j] = view.column_of(g.image(view.coordinate(0, j)));
    for (unsigned i = 1; i < view.rows(); ++i) {
      if (view.column_of(g.image(view.coordinate(i, j))) != target[j]) return false;
    }
  }
  return true;
}

bool preserves_residue_classes(const Isometry& g) {
  const unsigned n = g.length();
  for (unsigned c = 0; c < 4; ++c) {
    const unsigned target = g.image(c) % 4;
    for (unsigned k = c; k < n; k += 4) {
      if (g.image(k) % 4 != target) return false;
    }
  }
  return true;
}

bool shift_in_top_b(Bits shift, unsigned n) {
  const Bits f = fold_rows(shift, n, 4);
  return f == 0 || f == 0b1111;
}

std::vector<unsigned> parse_unsigned_list(std::string_view text, char separator) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(separator, pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(separator, pos), text.size());
    out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

std::string join(const std::vector<unsigned>& values, char separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Isometry::Isometry(std::span<const unsigned> perm, const Word& shift) : n_(shift.length()), shift_(shift.bits()) {
  if (perm.size() != n_) throw std::invalid_argument("permutation length mismatch");
  Bits seen = 0;
  for (unsigned i = 0; i < n_; ++i) {
    if (perm[i] >= n_) throw std::invalid_argument("permutation image out of range");
    seen |= Bits{1} << perm[i];
    perm_[i] = static_cast<std::uint8_t>(perm[i]);
  }
  if (seen != low_mask(n_)) throw std::invalid_argument("permutation is not a bijection");
}

Isometry Isometry::identity(unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  return Isometry(perm, Word::zero(n));
}

Isometry Isometry::translation(const Word& shift) {
  Isometry g = identity(shift.length());
  g.shift_ = shift.bits();
  return g;
}

std::vector<unsigned> Isometry::permutation() const { return {perm_.begin(), perm_.begin() + n_}; }

Bits Isometry::permute(Bits x) const {
  Bits out = 0;
  while (x) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(x));
    x &= x - 1;
    out |= coordinate_bit(n_, perm_[n_ - 1 - bit]);
  }
  return out;
}

Word Isometry::apply(const Word& w) const {
  if (w.length() != n_) throw std::invalid_argument("word length mismatch");
  return Word(n_, apply(w.bits()));
}

bool Isometry::is_translation() const {
  for (unsigned i = 0; i < n_; ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

std::string Isometry::to_string() const { return "perm=" + join(permutation(), ',') + ";shift=" + shift().to_string(); }

Isometry Isometry::parse(std::string_view text, unsigned n) {
  const std::size_t semi = text.find(';');
  if (!text.starts_with("perm=") || semi == std::string_view::npos ||
      !text.substr(semi + 1).starts_with("shift=")) {
    throw std::invalid_argument("isometry must read perm=<list>;shift=<bits>");
  }
  const auto perm = parse_unsigned_list(text.substr(5, semi - 5), ',');
  const Word shift = Word::parse(text.substr(semi + 7));
  if (shift.length() != n) throw std::invalid_argument("isometry shift has the wrong length");
  return Isometry(perm, shift);
}

Isometry compose(const Isometry& outer, const Isometry& inner) {
  if (outer.length() != inner.length()) throw std::invalid_argument("isometry length mismatch");
  const unsigned n = outer.length();
  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = outer.image(inner.image(i));
  return Isometry(perm, Word(n, outer.shift_bits() ^ outer.permute(inner.shift_bits())));
}

Isometry invert(const Isometry& g) {
  const unsigned n = g.length();
  std::vector<unsigned> inverse(n);
  for (unsigned i = 0; i < n; ++i) inverse[g.image(i)] = i;
  const Isometry pure(inverse, Word::zero(n));
  return Isometry(inverse, Word(n, pure.permute(g.shift_bits())));
}

CodeSet apply_set(const Isometry& g, const CodeSet& set) {
  if (g.length() != set.length()) throw std::invalid_argument("isometry length mismatch");
  const IsometryTable table(g);
  std::vector<Bits> out;
  out.reserve(set.size());
  for (Bits w : set.raw()) out.push_back(table(w));
  return CodeSet(set.length(), std::move(out));
}

IsometryTable::IsometryTable(const Isometry& g) : shift_(g.shift_bits()) {
  const unsigned n = g.length();
  for (unsigned low = 0; low < n; low += 8) {
    auto& table = tables_.emplace_back();
    const unsigned width = std::min(8u, n - low);
    for (unsigned byte = 0; byte < 256; ++byte) {
      table[byte] = byte < (1u << width) ? g.permute(Bits{byte} << low) : 0;
    }
  }
}

Bits IsometryTable::operator()(Bits x) const {
  Bits out = shift_;
  for (const auto& table : tables_) {
    out ^= table[x & 0xff];
    x >>= 8;
  }
  return out;
}

bool in_a(const Isometry& g, unsigned t) {
  const unsigned n = g.length();
  require_group_level(n, t);
  if (t == log2_length(n) - 1) return std::popcount(g.shift_bits()) % 2 == 0;
  const ArrayView view(n, t);
  std::vector<unsigned> target;
  return column_images(g, view, target) && theta_a_member_bits(g.shift_bits(), n, t);
}

bool in_b(const Isometry& g, unsigned t) {
  const unsigned n = g.length();
  require_group_level(n, t);
  if (t == log2_length(n) - 1) return preserves_residue_classes(g) && shift_in_top_b(g.shift_bits(), n);
  const ArrayView view(n, t);
  std::vector<unsigned> target;
  if (!column_images(g, view, target)) return false;
  for (unsigned j = 0; j < view.columns(); ++j) {
    const unsigned flip = view.row_of(g.image(view.coordinate(0, j))) % 2;
    for (unsigned i = 1; i < view.rows(); ++i) {
      if (view.row_of(g.image(view.coordinate(i, j))) % 2 != (i % 2 ^ flip)) return false;
    }
  }
  return b_member_bits(g.shift_bits(), n, t);
}

DefinitionalGroups::DefinitionalGroups(unsigned n, unsigned t)
    : n_(n), t_(t), omega_(neighborhood(a_enumerate(n, t))), b_(b_definitional(n, t)) {}

bool DefinitionalGroups::in_a(const Isometry& g) const {
  if (g.length() != n_) throw std::invalid_argument("isometry length mismatch");
  return std::all_of(omega_.raw().begin(), omega_.raw().end(), [&](Bits w) { return omega_.contains(g.apply(w)); });
}

bool DefinitionalGroups::in_b(const Isometry& g) const {
  if (g.length() != n_) throw std::invalid_argument("isometry length mismatch");
  return std::all_of(b_.raw().begin(), b_.raw().end(), [&](Bits w) { return b_.contains(g.apply(w)); });
}

Isometry sample_a(unsigned n, unsigned t, Rng& rng) {
  require_group_level(n, t);
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  Bits shift = rng() & low_mask(n);
  if (t == log2_length(n) - 1) {
    shuffle(std::span(perm), rng);
    if (std::popcount(shift) % 2) shift ^= 1;
    return Isometry(perm, Word(n, shift));
  }
  const ArrayView view(n, t);
  std::vector<unsigned> columns(view.columns());
  std::iota(columns.begin(), columns.end(), 0u);
  shuffle(std::span(columns), rng);
  std::vector<unsigned> rows(view.rows());
  for (unsigned j = 0; j < view.columns(); ++j) {
    std::iota(rows.begin(), rows.end(), 0u);
    shuffle(std::span(rows), rng);
    for (unsigned i = 0; i < view.rows(); ++i) perm[view.coordinate(i, j)] = view.coordinate(rows[i], columns[j]);
  }
  const unsigned width = view.columns();
  shift ^= fold_rows(shift, n, width) << (n - width);
  return Isometry(perm, Word(n, shift));
}

Isometry sample_b(unsigned n, unsigned t, Rng& rng) {
  require_group_level(n, t);
  std::vector<unsigned> perm(n);
  if (t == log2_length(n) - 1) {
    std::array<unsigned, 4> classes{0, 1, 2, 3};
    shuffle(std::span<unsigned>(classes), rng);
    for (unsigned c = 0; c < 4; ++c) {
      auto source = residue_class(n, c);
      auto target = residue_class(n, classes[c]);
      shuffle(std::span(target), rng);
      for (std::size_t i = 0; i < source.size(); ++i) perm[source[i]] = target[i];
    }
    Bits shift = rng() & low_mask(n);
    if (std::popcount(shift) % 2) shift ^= 1;
    shift ^= block_translation(n, block_translation_class(shift, n));
    return Isometry(perm, Word(n, shift));
  }
  const ArrayView view(n, t);
  std::vector<unsigned> columns(view.columns());
  std::iota(columns.begin(), columns.end(), 0u);
  shuffle(std::span(columns), rng);
  const unsigned half = view.rows() / 2;
  std::vector<unsigned> evens(half), odds(half);
  for (unsigned j = 0; j < view.columns(); ++j) {
    for (unsigned i = 0; i < half; ++i) {
      evens[i] = 2 * i;
      odds[i] = 2 * i + 1;
    }
    shuffle(std::span(evens), rng);
    shuffle(std::span(odds), rng);
    if (uniform_below(rng, 2)) std::swap(evens, odds);
    for (unsigned i = 0; i < half; ++i) {
      perm[view.coordinate(2 * i, j)] = view.coordinate(evens[i], columns[j]);
      perm[view.coordinate(2 * i + 1, j)] = view.coordinate(odds[i], columns[j]);
    }
  }
  Bits shift;
  if (t == 1) {
    shift = v_element(n, 1, uniform_below(rng, v_size(n, 1))).bits();
  } else {
    const unsigned width = view.columns();
    shift = rng() & low_mask(n);
    shift ^= fold_rows(shift, n, width) << (n - width);
    if (!b_member_bits(shift, n, t)) shift ^= column_translation(n, t);
  }
  return Isometry(perm, Word(n, shift));
}

bool uses_block_partition(unsigned n, unsigned t) {
  require_group_level(n, t);
  return t == log2_length(n) - 1;
}

void validate(const DRep& rep) {
  require_group_level(rep.n, rep.t);
  const unsigned n = rep.n;
  if (uses_block_partition(n, rep.t)) {
    if (rep.translation > 3) throw std::invalid_argument("malformed partition: translation class must be 0..3");
    if (rep.blocks.size() != 4) throw std::invalid_argument("malformed partition: need 4 blocks");
    Bits seen = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const auto& block = rep.blocks[b];
      if (block.size() != n / 4) throw std::invalid_argument("malformed partition: block size must be n/4");
      if (!std::is_sorted(block.begin(), block.end())) throw std::invalid_argument("malformed partition: unsorted block");
      if (b > 0 && rep.blocks[b - 1].front() > block.front()) {
        throw std::invalid_argument("malformed partition: blocks not ordered by minimum");
      }
      for (unsigned k : block) {
        if (k >= n || (seen >> k & 1)) throw std::invalid_argument("malformed partition: blocks do not tile");
        seen |= Bits{1} << k;
      }
    }
    return;
  }
  if (rep.translation > 1) throw std::invalid_argument("malformed partition: translation bit must be 0 or 1");
  const ArrayView view(n, rep.t);
  if (rep.blocks.size() != view.columns()) throw std::invalid_argument("malformed partition: one block per column");
  for (const auto& block : rep.blocks) {
    if (block.size() != view.rows() / 2) throw std::invalid_argument("malformed partition: block must hold half the rows");
    if (block.front() != 0) throw std::invalid_argument("malformed partition: block must contain row 0");
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] >= view.rows() || (i > 0 && block[i] <= block[i - 1])) {
        throw std::invalid_argument("malformed partition: rows must be ascending and in range");
      }
    }
  }
}

DRep identity_rep(unsigned n, unsigned t) {
  DRep rep{n, t, {}, 0};
  if (uses_block_partition(n, t)) {
    for (unsigned c = 0; c < 4; ++c) rep.blocks.push_back(residue_class(n, c));
    return rep;
  }
  const ArrayView view(n, t);
  std::vector<unsigned> evens;
  for (unsigned i = 0; i < view.rows(); i += 2) evens.push_back(i);
  rep.blocks.assign(view.columns(), evens);
  return rep;
}

Isometry realize(const DRep& rep) {
  validate(rep);
  const unsigned n = rep.n;
  std::vector<unsigned> perm(n);
  Bits quotient_translation = 0;
  if (uses_block_partition(n, rep.t)) {
    for (unsigned c = 0; c < 4; ++c) {
      const auto source = residue_class(n, c);
      for (std::size_t i = 0; i < source.size(); ++i) perm[source[i]] = rep.blocks[c][i];
    }
    quotient_translation = block_translation(n, rep.translation);
  } else {
    const ArrayView view(n, rep.t);
    for (unsigned j = 0; j < view.columns(); ++j) {
      const auto& block = rep.blocks[j];
      std::vector<unsigned> rest;
      for (unsigned i = 0, b = 0; i < view.rows(); ++i) {
        if (b < block.size() && block[b] == i) {
          ++b;
        } else {
          rest.push_back(i);
        }
      }
      for (unsigned i = 0; i < block.size(); ++i) {
        perm[view.coordinate(2 * i, j)] = view.coordinate(block[i], j);
        perm[view.coordinate(2 * i + 1, j)] = view.coordinate(rest[i], j);
      }
    }
    quotient_translation = rep.translation ? column_translation(n, rep.t) : 0;
  }
  const Isometry pure(perm, Word::zero(n));
  return Isometry(perm, Word(n, pure.permute(quotient_translation)));
}

BigCount d_size(unsigned n, unsigned t) {
  if (uses_block_partition(n, t)) return factorial(n) / (6 * power(factorial(n / 4), 4));
  const unsigned rows = 1u << t;
  return 2 * power(binomial(rows, rows / 2) / 2, n >> t);
}

BigCount group_order_a(unsigned n, unsigned t) {
  if (uses_block_partition(n, t)) return factorial(n) * power_of_two(n - 1);
  const unsigned rows = 1u << t;
  const unsigned columns = n >> t;
  return factorial(columns) * power(factorial(rows), columns) * power_of_two(columns * (rows - 1));
}

BigCount group_order_b(unsigned n, unsigned t) {
  if (uses_block_partition(n, t)) return 24 * power(factorial(n / 4), 4) * power_of_two(n - 3);
  const unsigned rows = 1u << t;
  const unsigned columns = n >> t;
  const BigCount per_column = 2 * power(factorial(rows / 2), 2);
  return factorial(columns) * power(per_column, columns) * power_of_two(columns * (rows - 1) - 1);
}

DRep sample_d(unsigned n, unsigned t, Rng& rng) {
  DRep rep{n, t, {}, 0};
  if (uses_block_partition(n, t)) {
    std::vector<unsigned> coords(n);
    std::iota(coords.begin(), coords.end(), 0u);
    shuffle(std::span(coords), rng);
    for (unsigned b = 0; b < 4; ++b) {
      std::vector<unsigned> block(coords.begin() + b * (n / 4), coords.begin() + (b + 1) * (n / 4));
      std::sort(block.begin(), block.end());
      rep.blocks.push_back(std::move(block));
    }
    std::sort(rep.blocks.begin(), rep.blocks.end());
    rep.translation = static_cast<unsigned>(uniform_below(rng, 4));
    return rep;
  }
  const ArrayView view(n, t);
  std::vector<unsigned> others(view.rows() - 1);
  for (unsigned j = 0; j < view.columns(); ++j) {
    std::iota(others.begin(), others.end(), 1u);
    shuffle(std::span(others), rng);
    std::vector<unsigned> block(others.begin(), others.begin() + (view.rows() / 2 - 1));
    block.push_back(0);
    std::sort(block.begin(), block.end());
    rep.blocks.push_back(std::move(block));
  }
  rep.translation = static_cast<unsigned>(uniform_below(rng, 2));
  return rep;
}

namespace {

// Visits every k-subset of `pool` in lexicographic index order.
template <typename Visit>
void for_each_combination(const std::vector<unsigned>& pool, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<unsigned> chosen(k);
  if (k > pool.size()) return;
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    visit(chosen);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void visit_partitions(const std::vector<unsigned>& remaining, std::size_t depth, unsigned block_size, DRep& rep,
                      const std::function<void(const DRep&)>& visit) {
  if (remaining.empty()) {
    for (unsigned cls = 0; cls < 4; ++cls) {
      rep.translation = cls;
      visit(rep);
    }
    return;
  }
  const std::vector<unsigned> rest(remaining.begin() + 1, remaining.end());
  for_each_combination(rest, block_size - 1, [&](const std::vector<unsigned>& chosen) {
    auto& block = rep.blocks[depth];
    block.assign(1, remaining.front());
    block.insert(block.end(), chosen.begin(), chosen.end());
    std::vector<unsigned> next;
    std::set_difference(rest.begin(), rest.end(), chosen.begin(), chosen.end(), std::back_inserter(next));
    visit_partitions(next, depth + 1, block_size, rep, visit);
  });
}

}  // namespace

void for_each_d(unsigned n, unsigned t, const std::function<void(const DRep&)>& visit, std::uint64_t budget) {
  if (d_size(n, t) > BigCount(std::to_string(budget))) {
    throw std::length_error("enumeration of D^" + std::to_string(t) + " exceeds the budget");
  }
  DRep rep{n, t, {}, 0};
  if (uses_block_partition(n, t)) {
    rep.blocks.resize(4);
    std::vector<unsigned> all(n);
    std::iota(all.begin(), all.end(), 0u);
    visit_partitions(all, 0, n / 4, rep, visit);
    return;
  }
  const ArrayView view(n, t);
  std::vector<std::vector<unsigned>> options;
  std::vector<unsigned> pool(view.rows() - 1);
  std::iota(pool.begin(), pool.end(), 1u);
  for_each_combination(pool, view.rows() / 2 - 1, [&](const std::vector<unsigned>& chosen) {
    std::vector<unsigned> block{0};
    block.insert(block.end(), chosen.begin(), chosen.end());
    options.push_back(std::move(block));
  });
  std::vector<std::size_t> digit(view.columns(), 0);
  rep.blocks.assign(view.columns(), options.front());
  for (;;) {
    for (unsigned bit = 0; bit < 2; ++bit) {
      rep.translation = bit;
      visit(rep);
    }
    std::size_t j = 0;
    while (j < digit.size() && ++digit[j] == options.size()) {
      digit[j] = 0;
      rep.blocks[j] = options.front();
      ++j;
    }
    if (j == digit.size()) return;
    rep.blocks[j] = options[digit[j]];
  }
}

std::vector<DRep> enumerate_d(unsigned n, unsigned t, std::uint64_t budget) {
  std::vector<DRep> out;
  for_each_d(n, t, [&](const DRep& rep) { out.push_back(rep); }, budget);
  return out;
}

Factorization factor_mod_b(const Isometry& g, unsigned t) {
  const unsigned n = g.length();
  if (!in_a(g, t)) throw std::invalid_argument("factor_mod_b: isometry is not in A^t");
  DRep rep{n, t, {}, 0};
  if (uses_block_partition(n, t)) {
    for (unsigned c = 0; c < 4; ++c) {
      std::vector<unsigned> block;
      for (unsigned k : residue_class(n, c)) block.push_back(g.image(k));
      std::sort(block.begin(), block.end());
      rep.blocks.push_back(std::move(block));
    }
    std::sort(rep.blocks.begin(), rep.blocks.end());
  } else {
    const ArrayView view(n, t);
    rep.blocks.resize(view.columns());
    for (unsigned j = 0; j < view.columns(); ++j) {
      const unsigned target = view.column_of(g.image(view.coordinate(0, j)));
      std::vector<bool> image(view.rows(), false);
      for (unsigned i = 0; i < view.rows(); i += 2) image[view.row_of(g.image(view.coordinate(i, j)))] = true;
      const bool keep = image[0];
      std::vector<unsigned> block;
      for (unsigned i = 0; i < view.rows(); ++i) {
        if (image[i] == keep) block.push_back(i);
      }
      rep.blocks[target] = std::move(block);
    }
  }
  const Bits residual_shift = invert(realize(rep)).permute(g.shift_bits());
  if (uses_block_partition(n, t)) {
    rep.translation = block_translation_class(residual_shift, n);
  } else {
    rep.translation = b_member_bits(residual_shift, n, t) ? 0 : 1;
  }
  return {rep, compose(invert(realize(rep)), g)};
}

std::string to_string(const DRep& rep) {
  std::string out = "D" + std::to_string(rep.t) + ":";
  const bool blocks = uses_block_partition(rep.n, rep.t);
  out += blocks ? "blocks=" : "cols=";
  for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
    if (i) out += blocks ? '|' : ';';
    out += join(rep.blocks[i], ',');
  }
  return out + ":b=" + std::to_string(rep.translation);
}

DRep parse_drep(std::string_view text, unsigned n) {
  const auto fields = split(text, ':');
  if (fields.size() != 3 || !fields[0].starts_with("D") || !fields[2].starts_with("b=")) {
    throw std::invalid_argument("representative must read D<t>:<partition>:b=<k>");
  }
  DRep rep{n, 0, {}, 0};
  rep.t = parse_unsigned_list(fields[0].substr(1), ',').at(0);
  require_group_level(n, rep.t);
  rep.translation = parse_unsigned_list(fields[2].substr(2), ',').at(0);
  const bool blocks = uses_block_partition(n, rep.t);
  const std::string_view key = blocks ? "blocks=" : "cols=";
  if (!fields[1].starts_with(key)) {
    throw std::invalid_argument("representative at level " + std::to_string(rep.t) + " needs " + std::string(key));
  }
  for (std::string_view block : split(fields[1].substr(key.size()), blocks ? '|' : ';')) {
    rep.blocks.push_back(parse_unsigned_list(block, ','));
  }
  validate(rep);
  return rep;
}

}  // namespace laperfect
