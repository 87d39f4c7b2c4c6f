#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laperfect/code_set.hpp"
#include "laperfect/isometry.hpp"

namespace laperfect {

/// LA1: arbitrary elements of A^{t-1}. LA2: coset representatives.
/// LA3: representatives with every sibling collection nondegenerate.
enum class Mode { LA1, LA2, LA3 };

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// One local automorphism. `rep` is set for LA2/LA3 and `map` is then
/// realize(*rep).
struct Assignment {
  std::optional<DRep> rep;
  Isometry map;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Assignments g_{r_t,...,r_{m-1}} for t = 2..m. A level-t slot is
/// addressed by the mixed-radix index i_t + |V^t| (i_{t+1} + |V^{t+1}| (...)),
/// i_j being the position of r_j in the ascending enumeration of V^j, so the
/// siblings sharing a suffix s occupy [s |V^t|, (s+1) |V^t|). Level m has a
/// single slot.
class AssignmentTree {
 public:
  AssignmentTree(unsigned n, Mode mode);

  /// Every slot holds the identity (as the identity representative in LA2/LA3).
  static AssignmentTree identity(unsigned n, Mode mode);

  unsigned length() const { return n_; }
  unsigned levels() const { return m_; }
  Mode mode() const { return mode_; }

  std::size_t slot_count(unsigned t) const;
  const Assignment& at(unsigned t, std::size_t slot) const;
  /// Stores a representative (LA2/LA3) or a raw isometry (LA1).
  void set(unsigned t, std::size_t slot, const DRep& rep);
  void set(unsigned t, std::size_t slot, const Isometry& map);

  std::vector<std::size_t> path_of(unsigned t, std::size_t slot) const;
  std::size_t index_of(unsigned t, std::span<const std::size_t> path) const;

  friend bool operator==(const AssignmentTree&, const AssignmentTree&) = default;

 private:
  std::vector<Assignment>& level(unsigned t);
  const std::vector<Assignment>& level(unsigned t) const;

  unsigned n_;
  unsigned m_;
  Mode mode_;
  std::vector<std::vector<Assignment>> levels_;  // levels_[t - 2]
};

struct TreeVerdict {
  bool valid = true;
  std::string violation;
  std::optional<unsigned> level;
  std::optional<std::size_t> suffix;  // collection suffix index for degeneracy
};

/// Level membership for the tree's mode and, for LA3, nondegeneracy of every
/// sibling collection at t = 2..m-1.
TreeVerdict validate_tree(const AssignmentTree& tree);

/// The sibling collection at level t with the given suffix, as isometries.
std::vector<Isometry> collection(const AssignmentTree& tree, unsigned t, std::size_t suffix);

/// The code g(A^{m-1}) obtained by evaluating the recursion: A^1 = V^1 and
/// A^t_s is the union of r_t + g_{r_t,s}(A^{t-1}_{r_t,s}). Evaluated by
/// composing the maps along each root-to-leaf path. Throws on an invalid tree.
CodeSet build_code(const AssignmentTree& tree);

/// The intermediate set A^t_s (1 <= t <= m-1, s a level-(t+1) slot) by the
/// set recursion itself.
CodeSet build_level(const AssignmentTree& tree, unsigned t, std::size_t suffix);

inline constexpr unsigned kRejectionCap = 10000;

/// Deterministic in (n, seed, mode). Each sibling collection draws from its
/// own stream seeded by (seed, t, suffix). LA3 redraws a collection until it
/// is nondegenerate and throws std::runtime_error after kRejectionCap tries.
AssignmentTree sample_tree(unsigned n, std::uint64_t seed, Mode mode);

/// Deletes the last coordinate. Throws unless the input is extended 1-perfect.
CodeSet puncture(const CodeSet& code);

/// Line format: "n=", "mode=", then "assign t=<t> path=<i_t,...>|- rep=<...>"
/// in (t, slot) order. LA1 stores "perm=...;shift=..." after rep=.
std::string serialize_tree(const AssignmentTree& tree);
/// Errors carry the 1-based line number.
AssignmentTree parse_tree(std::string_view text);

}  // namespace laperfect
