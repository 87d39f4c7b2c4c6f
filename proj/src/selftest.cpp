#include "laperfect/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

#include "laperfect/analysis.hpp"
#include "laperfect/components.hpp"
#include "laperfect/construction.hpp"
#include "laperfect/counting.hpp"
#include "laperfect/isometry.hpp"
#include "laperfect/scaffold.hpp"

namespace laperfect {

namespace {

constexpr unsigned kN = 16;

struct Suite {
  std::string name;
  std::function<std::string()> run;  // empty string on success
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

std::string counting_suite() {
  if (k_la_exact(kN) != BigCount("15692092416000000")) return "k_la_exact(16)";
  if (k_la_exact_k_form(kN) != k_la_exact(kN)) return "binomial form at 16";
  if (d_size(kN, 3) * 57600 * 25920 != k_la_exact(kN)) return "factor split at 16";
  for (unsigned t = 1; t <= 3; ++t) {
    if (d_size_from_groups(kN, t) != d_size(kN, t)) return "group quotient at t=" + std::to_string(t);
  }
  return expect(std::abs(log2_of(k_la_exact(32)).log2 - 2363.79) <= 0.01, "log2 k_la_exact(32)");
}

std::string scaffold_suite() {
  const std::size_t omega_sizes[] = {2048, 16384, 32768};
  const std::size_t theta_sizes[] = {256, 4096, 32768};
  for (unsigned t = 1; t <= 3; ++t) {
    const CodeSet a = a_enumerate(kN, t);
    const CodeSet omega = neighborhood(a);
    const CodeSet th = theta(a);
    if (omega != scan_space(kN, [&](Bits x) { return omega_a_member_bits(x, kN, t); })) {
      return "Omega closed form at t=" + std::to_string(t);
    }
    if (th != scan_space(kN, [&](Bits x) { return theta_a_member_bits(x, kN, t); })) {
      return "Theta closed form at t=" + std::to_string(t);
    }
    if (omega.size() != omega_sizes[t - 1] || th.size() != theta_sizes[t - 1]) return "sizes at t=" + std::to_string(t);
  }
  for (unsigned t = 2; t <= 3; ++t) {
    if (b_enumerate(kN, t) != b_definitional(kN, t)) return "B closed form at t=" + std::to_string(t);
  }
  return "";
}

std::string isometry_suite(unsigned samples) {
  Rng rng(7);
  for (unsigned t = 1; t <= 3; ++t) {
    const DefinitionalGroups groups(kN, t);
    for (unsigned i = 0; i < samples; ++i) {
      const Isometry g = sample_a(kN, t, rng);
      if (!in_a(g, t) || (i < 20 && !groups.in_a(g))) return "sampled A element rejected at t=" + std::to_string(t);
      const Isometry h = sample_b(kN, t, rng);
      if (!in_b(h, t) || (i < 20 && !groups.in_b(h))) return "sampled B element rejected at t=" + std::to_string(t);
      const Factorization f = factor_mod_b(g, t);
      if (!in_b(f.residual, t) || !(compose(realize(f.rep), f.residual) == g)) {
        return "factorization at t=" + std::to_string(t);
      }
    }
  }
  return "";
}

std::string representatives_suite() {
  for (unsigned t = 1; t <= 2; ++t) {
    const auto reps = enumerate_d(kN, t);
    if (BigCount(reps.size()) != d_size(kN, t)) return "|D^" + std::to_string(t) + "|";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const Isometry inv = invert(realize(reps[i]));
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        if (in_b(compose(inv, realize(reps[j])), t)) return "equivalent representatives at t=" + std::to_string(t);
      }
    }
  }
  std::uint64_t count = 0;
  for_each_d(kN, 3, [&](const DRep&) { ++count; });
  return expect(BigCount(std::to_string(count)) == d_size(kN, 3), "|D^3| stream count");
}

std::string degeneracy_suite() {
  // t=1 over V^2 and t=2 over V^3.
  const std::uint64_t expected[] = {16, 324};
  for (unsigned t = 1; t <= 2; ++t) {
    const auto reps = enumerate_d(kN, t);
    std::vector<Isometry> maps;
    for (const DRep& d : reps) maps.push_back(realize(d));
    const auto subspace = v_set(kN, t + 1);
    std::vector<std::size_t> digit(subspace.size(), 0);
    std::vector<Isometry> chosen(subspace.size(), maps[0]);
    std::uint64_t degenerate = 0;
    for (;;) {
      if (is_degenerate(chosen, subspace)) ++degenerate;
      std::size_t j = 0;
      while (j < digit.size() && ++digit[j] == maps.size()) {
        digit[j] = 0;
        chosen[j] = maps[0];
        ++j;
      }
      if (j == digit.size()) break;
      chosen[j] = maps[digit[j]];
    }
    if (degenerate != expected[t - 1]) return "degenerate count at t=" + std::to_string(t);
  }
  return "";
}

std::string construction_suite(unsigned seeds) {
  if (build_code(AssignmentTree::identity(kN, Mode::LA2)) != hamming_code(kN)) return "identity tree is not H";
  std::set<std::vector<Bits>> seen;
  for (unsigned seed = 1; seed <= seeds; ++seed) {
    const CodeSet code = build_code(sample_tree(kN, seed, Mode::LA3));
    const CodeReport report = analyze(code);
    if (!report.extended_perfect()) return "seed " + std::to_string(seed) + " not extended perfect";
    if (report.rank != 13u || *report.kernel_dimension < 4) return "seed " + std::to_string(seed) + " rank/kernel";
    if (!verify_perfect(puncture(code))) return "seed " + std::to_string(seed) + " punctured";
    if (!seen.emplace(code.raw().begin(), code.raw().end()).second) return "repeated code";
  }
  return "";
}

}  // namespace

SelftestLevel parse_selftest_level(std::string_view text) {
  if (text == "quick") return SelftestLevel::Quick;
  if (text == "full") return SelftestLevel::Full;
  throw std::invalid_argument("level must be quick or full");
}

bool run_selftest(unsigned n, SelftestLevel level, std::ostream& out) {
  if (n != kN) throw std::invalid_argument("selftest runs at n=16 only");
  const bool full = level == SelftestLevel::Full;
  std::vector<Suite> suites{
      {"counting", counting_suite},
      {"scaffold", scaffold_suite},
      {"isometries", [&] { return isometry_suite(full ? 1000 : 100); }},
      {"construction", [&] { return construction_suite(full ? 100 : 5); }},
  };
  if (full) {
    suites.push_back({"representatives", representatives_suite});
    suites.push_back({"degeneracy", degeneracy_suite});
  }
  bool all = true;
  for (const Suite& suite : suites) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = suite.run();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (problem.empty() ? "PASS " : "FAIL ") << suite.name << " (" << std::round(seconds * 100) / 100 << "s)";
    if (!problem.empty()) out << ": " << problem;
    out << '\n';
    all = all && problem.empty();
  }
  return all;
}

}  // namespace laperfect
