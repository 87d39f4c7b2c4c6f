// Acceptance gate. One PASS/FAIL line per criterion; a criterion passes only
// if its check holds and it finishes within its time limit. The length-32
// smoke test runs only with --big.

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "laperfect/analysis.hpp"
#include "laperfect/components.hpp"
#include "laperfect/construction.hpp"
#include "laperfect/counting.hpp"
#include "laperfect/isometry.hpp"
#include "laperfect/scaffold.hpp"

using namespace laperfect;

namespace {

// Pinned limits and tolerances.
constexpr double kLog2K32 = 2363.79;
constexpr double kLog2K32Tolerance = 0.01;
constexpr double kRatioTolerance = 1e-6;
constexpr double kBigSeconds = 15 * 60;
constexpr double kBigMemoryBytes = 1.5 * 1024 * 1024 * 1024;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> check;
};

Outcome exact_count() {
  const BigCount k = k_la_exact(16);
  return {k == BigCount("15692092416000000"), "k_la_exact(16)=" + k.get_str()};
}

Outcome log_count_32() {
  const double x = log2_of(k_la_exact(32)).log2;
  char buf[64];
  std::snprintf(buf, sizeof buf, "log2 k_la_exact(32)=%.6f", x);
  return {std::abs(x - kLog2K32) <= kLog2K32Tolerance, buf};
}

Outcome representative_sizes() {
  std::string detail;
  for (unsigned t = 1; t <= 2; ++t) {
    const auto reps = enumerate_d(16, t);
    std::vector<Isometry> maps;
    for (const DRep& d : reps) maps.push_back(realize(d));
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const Isometry inv = invert(maps[i]);
      for (std::size_t j = i + 1; j < maps.size(); ++j) {
        if (in_b(compose(inv, maps[j]), t)) return {false, "equivalent pair at t=" + std::to_string(t)};
      }
    }
    if (BigCount(reps.size()) != d_size(16, t)) return {false, "|D^" + std::to_string(t) + "| mismatch"};
    detail += "|D^" + std::to_string(t) + "|=" + std::to_string(reps.size()) + " ";
  }
  std::uint64_t count = 0;
  for_each_d(16, 3, [&](const DRep&) { ++count; });
  detail += "|D^3|=" + std::to_string(count);
  const bool ok = d_size(16, 1) == 2 && d_size(16, 2) == 162 && count == 10510500 &&
                  d_size(16, 3) == BigCount(std::to_string(count));
  return {ok, detail};
}

Outcome omega_theta_oracle() {
  const std::size_t omega_sizes[] = {2048, 16384, 32768};
  const std::size_t theta_sizes[] = {256, 4096, 32768};
  for (unsigned t = 1; t <= 3; ++t) {
    const CodeSet a = a_enumerate(16, t);
    const CodeSet omega = neighborhood(a);
    const CodeSet th = theta(a);
    const CodeSet omega_closed = scan_space(16, [&](Bits x) { return omega_a_member_bits(x, 16, t); });
    const CodeSet theta_closed = scan_space(16, [&](Bits x) { return theta_a_member_bits(x, 16, t); });
    if (omega != omega_closed || th != theta_closed) return {false, "closed form differs at t=" + std::to_string(t)};
    if (omega.size() != omega_sizes[t - 1] || th.size() != theta_sizes[t - 1]) {
      return {false, "cardinality at t=" + std::to_string(t)};
    }
  }
  return {true, "Omega 2048/16384/32768, Theta 256/4096/32768"};
}

Outcome b_oracle() {
  const std::size_t sizes[] = {2048, 8192};
  for (unsigned t = 2; t <= 3; ++t) {
    const CodeSet closed = b_enumerate(16, t);
    if (closed != b_definitional(16, t) || closed.size() != sizes[t - 2]) {
      return {false, "B^" + std::to_string(t) + " mismatch"};
    }
  }
  return {true, "|B^2|=2048 |B^3|=8192"};
}

Outcome degeneracy_counts() {
  const auto d1 = enumerate_d(16, 1);
  const auto v2 = v_set(16, 2);
  std::size_t deg1 = 0, total1 = 0;
  for (unsigned mask = 0; mask < 256; ++mask, ++total1) {
    std::vector<Isometry> c;
    for (unsigned i = 0; i < 8; ++i) c.push_back(realize(d1[(mask >> i) & 1]));
    deg1 += is_degenerate(c, v2);
  }
  const auto d2 = enumerate_d(16, 2);
  std::vector<Isometry> maps;
  for (const DRep& d : d2) maps.push_back(realize(d));
  const auto v3 = v_set(16, 3);
  std::size_t deg2 = 0, total2 = 0;
  for (const Isometry& a : maps) {
    for (const Isometry& b : maps) {
      deg2 += is_degenerate(std::vector<Isometry>{a, b}, v3);
      ++total2;
    }
  }
  const std::string detail = std::to_string(deg1) + "/" + std::to_string(total1) + ", " + std::to_string(deg2) + "/" +
                             std::to_string(total2);
  return {deg1 == 16 && total1 == 256 && deg2 == 324 && total2 == 26244, detail};
}

Outcome construction_soundness() {
  std::set<std::vector<Bits>> codes;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const CodeSet c = build_code(sample_tree(16, seed, Mode::LA3));
    const CodeReport r = analyze(c);
    if (!r.extended_perfect() || r.cardinality != 2048) return {false, "seed " + std::to_string(seed) + " not perfect"};
    if (r.rank != 13u || r.rank_deficiency != 2) return {false, "seed " + std::to_string(seed) + " rank"};
    if (*r.kernel_dimension < 4) return {false, "seed " + std::to_string(seed) + " kernel"};
    codes.emplace(c.raw().begin(), c.raw().end());
  }
  return {codes.size() == 100, std::to_string(codes.size()) + " distinct codes, all rank 13, kernel >= 4"};
}

Outcome hamming_oracle() {
  const CodeSet h = hamming_code(16);
  const CodeSet built = build_code(AssignmentTree::identity(16, Mode::LA2));
  bool linear = true;
  for (Bits a : h.raw()) {
    for (Bits b : h.raw()) linear = linear && h.contains(a ^ b);
  }
  const unsigned d = min_distance(h);
  const unsigned r = rank(h);
  return {built == h && linear && h.size() == 2048 && d == 4 && r == 11,
          "identity tree == H, linear, |H|=" + std::to_string(h.size()) + " d=" + std::to_string(d) + " rank=" +
              std::to_string(r)};
}

Outcome puncturing() {
  std::vector<CodeSet> codes{hamming_code(16)};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) codes.push_back(build_code(sample_tree(16, seed, Mode::LA3)));
  for (const CodeSet& c : codes) {
    const CodeSet p = puncture(c);
    // Count covering balls per word directly.
    std::vector<std::uint8_t> hits(std::size_t{1} << 15, 0);
    for (Bits w : p.raw()) {
      ++hits[w];
      for (unsigned k = 0; k < 15; ++k) ++hits[w ^ (Bits{1} << k)];
    }
    for (std::uint8_t h : hits) {
      if (h != 1) return {false, "a word is covered " + std::to_string(h) + " times"};
    }
    if (!verify_perfect(p)) return {false, "verify_perfect disagrees"};
  }
  return {true, "H and 10 LA3 codes puncture to perfect length-15 codes"};
}

Outcome factorization() {
  Rng rng(20240601);
  for (unsigned t = 1; t <= 2; ++t) {
    for (int i = 0; i < 1000; ++i) {
      const Isometry g = sample_a(16, t, rng);
      const Factorization f = factor_mod_b(g, t);
      if (!in_b(f.residual, t) || !(compose(realize(f.rep), f.residual) == g)) {
        return {false, "factorization failed at t=" + std::to_string(t)};
      }
    }
  }
  return {true, "2000 elements factored exactly"};
}

Outcome bound_ordering() {
  std::string detail;
  bool ok = true;
  for (unsigned n : {16u, 32u}) {
    const HistoricalBounds b = historical_bounds(n);
    const double exact = log2_of(k_la_exact(n)).log2;
    const double upper = log2_of(k_la_upper(n)).log2;
    ok = ok && b.vasilev.log2 < b.krotov2000.log2 && b.krotov2000.log2 < exact && k_la_exact(n) <= k_la_upper(n);
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=%u: %.4f < %.4f < %.4f <= %.4f; ", n, b.vasilev.log2, b.krotov2000.log2, exact,
                  upper);
    detail += buf;
    if (n == 32) {
      ok = ok && upper - exact <= kRatioTolerance;
      std::snprintf(buf, sizeof buf, "log2(upper/exact)=%.3g", upper - exact);
      detail += buf;
    }
  }
  return {ok, detail};
}

double peak_rss_bytes() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss * 1024.0;
}

Outcome big_smoke() {
  const CodeSet c = build_code(sample_tree(32, 1, Mode::LA3));
  const CodeReport r = verify_extended_perfect(c);
  const double rss = peak_rss_bytes();
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu words, uncovered=%llu, multiply_covered=%llu, peak RSS %.0f MiB", r.cardinality,
                static_cast<unsigned long long>(r.uncovered), static_cast<unsigned long long>(r.multiply_covered),
                rss / (1024 * 1024));
  return {r.extended_perfect() && r.cardinality == (std::size_t{1} << 26) && rss <= kBigMemoryBytes, buf};
}

}  // namespace

int main(int argc, char** argv) {
  const bool big = argc > 1 && std::strcmp(argv[1], "--big") == 0;
  std::vector<Criterion> criteria{
      {1, "exact count at n=16", 1, exact_count},
      {2, "log2 count at n=32", 1, log_count_32},
      {3, "representative set sizes at n=16", 30, representative_sizes},
      {4, "Omega/Theta closed forms at n=16", 30, omega_theta_oracle},
      {5, "B closed form at n=16", 10, b_oracle},
      {6, "degenerate collection counts at n=16", 10, degeneracy_counts},
      {7, "100 LA3 codes at n=16", 60, construction_soundness},
      {8, "Hamming oracle", 1, hamming_oracle},
      {9, "puncturing", 10, puncturing},
      {10, "factorization modulo B", 10, factorization},
      {11, "bound ordering at n=16,32", 1, bound_ordering},
  };
  if (big) criteria.push_back({12, "n=32 LA3 smoke test", kBigSeconds, big_smoke});

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = outcome.ok && seconds <= c.limit_seconds;
    failed += !pass;
    std::printf("%s criterion %d: %s [%.2fs / %.0fs] %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.limit_seconds, outcome.detail.c_str());
  }
  if (!big) std::printf("SKIP criterion 12: n=32 LA3 smoke test (run with --big)\n");
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
