#pragma once

#include <string>
#include <vector>

#include "laperfect/bigcount.hpp"

namespace laperfect {

// Counting formulas for n = 2^m, m >= 4. |V^i| = 2^{2^{m-i}-1} and |D^t|
// comes from d_size.

/// |D^{m-1}| prod_{t=1}^{m-2} (|D^t|^{|V^{t+1}|} - |D^t| |V^{t+1}|)^{|V^{t+2}|...|V^{m-1}|}:
/// the number of distinct codes from nondegenerate trees.
BigCount k_la_exact(unsigned n);

/// Same quantity through the binomial form indexed by k = 2, 4, ..., n/4,
/// evaluated over the rationals.
BigCount k_la_exact_k_form(unsigned n);

/// |D^{m-1}| prod_{t=1}^{m-2} |D^t|^{|V^{t+1}|...|V^{m-1}|}.
BigCount k_la_upper(unsigned n);

/// Earlier lower bounds and the known upper bound, all as log2 of the count.
struct HistoricalBounds {
  LogValue vasilev;
  LogValue krotov2000;
  /// Upper bound 2^{2^{N - 1.5 log N + log log(eN)}} (inner log natural)
  /// with N = n - 1 and with N = n.
  LogValue upper_n_minus_1;
  LogValue upper_n;
};
HistoricalBounds historical_bounds(unsigned n);

/// log2 of K/(n! 2^{n-5}) and K/((n-1)! 2^{n-5}) for K = k_la_exact(n).
/// Negative values are reported as they are.
struct NonequivalenceBounds {
  LogValue extended;
  LogValue punctured;
};
NonequivalenceBounds nonequivalence_bounds(unsigned n);

/// One multiplier of the asymptotic product, log2 only.
struct ExpansionFactor {
  unsigned k = 0;     // 2^t; 0 marks the |D^{m-1}| term
  LogValue value;
  std::string label;  // closed form as text
};

/// Factors for k = 2, 4, ..., n/4 followed by the |D^{m-1}| term; the
/// log2 values sum to log2 k_la_upper(n).
std::vector<ExpansionFactor> asymptotic_expansion(unsigned n);

/// |A^t| / |B^t| from the group orders. Throws if the division is inexact.
BigCount d_size_from_groups(unsigned n, unsigned t);

}  // namespace laperfect
