#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "laperfect/code_set.hpp"
#include "laperfect/components.hpp"

namespace laperfect {

struct CodeReport {
  unsigned n = 0;
  std::size_t cardinality = 0;
  std::size_t expected_cardinality = 0;  // 2^{n - log n - 1}
  bool omega_disjoint = false;
  bool omega_covers_odd = false;
  bool min_distance_at_least_4 = false;  // same as omega_disjoint
  std::uint64_t uncovered = 0;           // odd words outside Omega(C)
  std::uint64_t multiply_covered = 0;    // extra hits beyond the first
  std::optional<unsigned> rank;
  std::optional<int> rank_deficiency;
  std::optional<unsigned> kernel_dimension;

  bool extended_perfect() const {
    return cardinality == expected_cardinality && omega_disjoint && omega_covers_odd;
  }
  /// Names of the failed conditions, comma separated; empty when perfect.
  std::string failures() const;
  /// Flat key=value lines.
  std::string render() const;
};

/// Marks the neighborhood of every codeword in an odd-word bitmap
/// (256 MiB at n = 32). Throws on an odd codeword or n > 32.
CodeReport verify_extended_perfect(const CodeSet& code);

/// Every word of F^L lies within distance 1 of exactly one codeword.
bool verify_perfect(const CodeSet& code);

unsigned rank(const CodeSet& code);
/// (n - 1) - rank.
int rank_deficiency(const CodeSet& code);

/// {k : C + k = C}; candidates are the differences c + c_0.
AffineSubspace kernel(const CodeSet& code);

/// Set inequality. Throws on a length mismatch.
bool distinct(const CodeSet& a, const CodeSet& b);

/// Pairwise minimum distance; quadratic, for oracles.
unsigned min_distance(const CodeSet& code);

struct AnalyzeOptions {
  bool with_rank = true;
  bool with_kernel = true;
};

/// verify_extended_perfect plus the optional invariants.
CodeReport analyze(const CodeSet& code, const AnalyzeOptions& options = {});

}  // namespace laperfect
