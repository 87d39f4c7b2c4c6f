#include "laperfect/analysis.hpp"

#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "laperfect/gf2.hpp"

namespace laperfect {

std::string CodeReport::failures() const {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(cardinality == expected_cardinality, "cardinality");
  add(omega_disjoint, "omega_disjoint");
  add(omega_covers_odd, "omega_covers_odd");
  return out;
}

std::string CodeReport::render() const {
  std::ostringstream out;
  out << "n=" << n << "\n";
  out << "cardinality=" << cardinality << "\n";
  out << "expected_cardinality=" << expected_cardinality << "\n";
  out << "min_distance_at_least_4=" << min_distance_at_least_4 << "\n";
  out << "omega_disjoint=" << omega_disjoint << "\n";
  out << "omega_covers_odd=" << omega_covers_odd << "\n";
  out << "uncovered=" << uncovered << "\n";
  out << "multiply_covered=" << multiply_covered << "\n";
  if (rank) out << "rank=" << *rank << "\n";
  if (rank_deficiency) out << "rank_deficiency=" << *rank_deficiency << "\n";
  if (kernel_dimension) out << "kernel_dimension=" << *kernel_dimension << "\n";
  out << "extended_perfect=" << extended_perfect() << "\n";
  if (!extended_perfect()) out << "failed=" << failures() << "\n";
  return out.str();
}

CodeReport verify_extended_perfect(const CodeSet& code) {
  const unsigned n = code.length();
  if (n < 2 || n > 32) throw std::invalid_argument("coverage check supports lengths 2..32");
  if (!code.all_even()) throw std::invalid_argument("code has an odd-weight word");
  CodeReport report;
  report.n = n;
  report.cardinality = code.size();
  report.expected_cardinality = is_power_of_two(n) ? std::size_t{1} << (n - log2_length(n) - 1) : 0;

  WordBitmap hit(n, Parity::Odd);
  for (Bits w : code.raw()) {
    for (unsigned k = 0; k < n; ++k) {
      if (hit.set(w ^ coordinate_bit(n, k))) ++report.multiply_covered;
    }
  }
  const std::uint64_t odd_words = std::uint64_t{1} << (n - 1);
  report.uncovered = odd_words - hit.count();
  report.omega_disjoint = report.multiply_covered == 0;
  report.min_distance_at_least_4 = report.omega_disjoint;
  report.omega_covers_odd = report.uncovered == 0;
  return report;
}

bool verify_perfect(const CodeSet& code) {
  const unsigned n = code.length();
  if (n > 32) throw std::invalid_argument("perfect covering check supports lengths up to 32");
  WordBitmap hit(n);
  for (Bits w : code.raw()) {
    if (hit.set(w)) return false;
    for (unsigned k = 0; k < n; ++k) {
      if (hit.set(w ^ coordinate_bit(n, k))) return false;
    }
  }
  return hit.count() == (std::size_t{1} << n);
}

unsigned rank(const CodeSet& code) { return affine_span(code).dimension(); }

int rank_deficiency(const CodeSet& code) { return static_cast<int>(code.length()) - 1 - static_cast<int>(rank(code)); }

namespace {

// Probes every codeword in an order that spreads over the sorted list, so
// that non-periods are rejected early.
bool is_period(const CodeSet& code, const WordBitmap* members, Bits k) {
  const auto words = code.raw();
  const std::size_t size = words.size();
  std::size_t stride = size > 1 ? 0x9e3779b1 % size : 1;
  while (std::gcd(stride, size) != 1) ++stride;
  std::size_t i = 0;
  for (std::size_t step = 0; step < size; ++step) {
    const Bits x = words[i] ^ k;
    if (members ? !members->test(x) : !code.contains(x)) return false;
    i = (i + stride) % size;
  }
  return true;
}

}  // namespace

AffineSubspace kernel(const CodeSet& code) {
  if (code.empty()) throw std::invalid_argument("kernel of an empty code");
  const unsigned n = code.length();
  const CodeSet shifted = code.translated(code.raw().front());
  std::optional<WordBitmap> members;
  if (n <= 24) {
    members.emplace(WordBitmap::of(shifted));
  } else if (n <= 32 && shifted.all_even()) {
    members.emplace(n, Parity::Even);
    for (Bits w : shifted.raw()) members->set(w);
  }
  Gf2Basis periods;
  for (Bits c : shifted.raw()) {
    if (periods.contains(c)) continue;
    if (is_period(shifted, members ? &*members : nullptr, c)) periods.insert(c);
  }
  AffineSubspace out{Word::zero(n), {}};
  for (Bits row : periods.rows()) out.basis.emplace_back(n, row);
  return out;
}

bool distinct(const CodeSet& a, const CodeSet& b) {
  if (a.length() != b.length()) throw std::invalid_argument("codes of different lengths");
  return !(a == b);
}

unsigned min_distance(const CodeSet& code) {
  unsigned best = std::numeric_limits<unsigned>::max();
  const auto words = code.raw();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, static_cast<unsigned>(std::popcount(words[i] ^ words[j])));
    }
  }
  return best;
}

CodeReport analyze(const CodeSet& code, const AnalyzeOptions& options) {
  CodeReport report = verify_extended_perfect(code);
  if (options.with_rank) {
    report.rank = rank(code);
    report.rank_deficiency = static_cast<int>(code.length()) - 1 - static_cast<int>(*report.rank);
  }
  if (options.with_kernel) report.kernel_dimension = kernel(code).dimension();
  return report;
}

}  // namespace laperfect
