#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "laperfect/bigcount.hpp"
#include "laperfect/code_set.hpp"
#include "laperfect/random.hpp"
#include "laperfect/word.hpp"

namespace laperfect {

/// Isometry x -> shift + perm(x) of F^n, where perm moves the bit at
/// coordinate i to coordinate perm(i). The (perm, shift) pair is the
/// unique normal form.
class Isometry {
 public:
  Isometry() = default;
  Isometry(std::span<const unsigned> perm, const Word& shift);

  static Isometry identity(unsigned n);
  static Isometry translation(const Word& shift);

  unsigned length() const { return n_; }
  unsigned image(unsigned k) const { return perm_[k]; }
  std::vector<unsigned> permutation() const;
  Word shift() const { return Word(n_, shift_); }
  Bits shift_bits() const { return shift_; }

  /// perm(x) on raw encodings.
  Bits permute(Bits x) const;
  Bits apply(Bits x) const { return shift_ ^ permute(x); }
  Word apply(const Word& w) const;

  bool is_translation() const;
  bool same_permutation(const Isometry& other) const { return n_ == other.n_ && perm_ == other.perm_; }

  /// "perm=<comma list>;shift=<binary>".
  std::string to_string() const;
  static Isometry parse(std::string_view text, unsigned n);

  friend bool operator==(const Isometry&, const Isometry&) = default;

 private:
  unsigned n_ = 0;
  std::array<std::uint8_t, kMaxLength> perm_{};
  Bits shift_ = 0;
};

/// apply(compose(outer, inner), x) == apply(outer, apply(inner, x)).
Isometry compose(const Isometry& outer, const Isometry& inner);
Isometry invert(const Isometry& g);
CodeSet apply_set(const Isometry& g, const CodeSet& set);

/// Byte-table form of an isometry for bulk application.
class IsometryTable {
 public:
  explicit IsometryTable(const Isometry& g);
  Bits operator()(Bits x) const;

 private:
  std::vector<std::array<Bits, 256>> tables_;
  Bits shift_;
};

// Group A^t = Aut(Omega(A^t)) and its subgroup B^t, 1 <= t <= m-1.

/// Structural test: column-preserving permutation at level t with shift in
/// Theta(A^t); for t = m-1 any permutation with an even shift.
bool in_a(const Isometry& g, unsigned t);

/// Structural test: permutation that keeps level-t columns and, per column,
/// keeps or swaps the even/odd row classes, with shift in B^t; for t = m-1 a
/// permutation of the residue classes mod 4 with shift in B^{m-1}.
bool in_b(const Isometry& g, unsigned t);

/// Definitional membership by applying g to the brute-force sets; caches
/// Omega(A^t) and B^t for one (n, t). Small n only.
class DefinitionalGroups {
 public:
  DefinitionalGroups(unsigned n, unsigned t);
  /// g(Omega(A^t)) == Omega(A^t).
  bool in_a(const Isometry& g) const;
  /// g(B^t) == B^t, i.e. membership in Aut(B^t).
  bool in_b(const Isometry& g) const;

 private:
  unsigned n_;
  unsigned t_;
  CodeSet omega_;
  CodeSet b_;
};

/// Random element of A^t drawn from the semidirect-product generators.
Isometry sample_a(unsigned n, unsigned t, Rng& rng);
/// Random element of B^t drawn from its generators.
Isometry sample_b(unsigned n, unsigned t, Rng& rng);

/// Canonical representative of a coset in A^t / B^t.
///
/// For t < m-1, `blocks` holds one entry per level-t column: the sorted set
/// of 2^{t-1} rows that the even rows are sent to (it always contains row 0),
/// and `translation` is a bit. For t = m-1, `blocks` is the unordered split
/// of all coordinates into 4 blocks of size n/4 (sorted by minimum) that the
/// residue classes mod 4 are sent to, and `translation` is in 0..3.
struct DRep {
  unsigned n = 0;
  unsigned t = 0;
  std::vector<std::vector<unsigned>> blocks;
  unsigned translation = 0;

  friend bool operator==(const DRep&, const DRep&) = default;
  friend auto operator<=>(const DRep&, const DRep&) = default;
};

/// True when level t uses the 4-block form (t = m-1).
bool uses_block_partition(unsigned n, unsigned t);

/// Throws std::invalid_argument on a malformed partition.
void validate(const DRep& rep);

/// The representative with every column block equal to the even rows (or
/// blocks equal to the residue classes) and translation 0.
DRep identity_rep(unsigned n, unsigned t);

/// Isometry pi o tau_b for the partition-derived permutation pi.
Isometry realize(const DRep& rep);

/// |D^t| from the coset-count formula.
BigCount d_size(unsigned n, unsigned t);

/// |A^t| and |B^t| from their factorizations.
BigCount group_order_a(unsigned n, unsigned t);
BigCount group_order_b(unsigned n, unsigned t);

/// Uniform over all representatives of level t.
DRep sample_d(unsigned n, unsigned t, Rng& rng);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 25;

/// Streams every representative exactly once. The DRep passed to `visit`
/// is reused between calls. Throws when d_size exceeds `budget`.
void for_each_d(unsigned n, unsigned t, const std::function<void(const DRep&)>& visit,
                std::uint64_t budget = kDefaultEnumerationBudget);
std::vector<DRep> enumerate_d(unsigned n, unsigned t, std::uint64_t budget = kDefaultEnumerationBudget);

struct Factorization {
  DRep rep;
  Isometry residual;
};

/// Writes g = realize(rep) o residual with residual in B^t. Requires in_a(g, t).
Factorization factor_mod_b(const Isometry& g, unsigned t);

/// "D<t>:cols=<block;...>:b=<k>" or "D<t>:blocks=<b|b|b|b>:b=<k>".
std::string to_string(const DRep& rep);
DRep parse_drep(std::string_view text, unsigned n);

}  // namespace laperfect
