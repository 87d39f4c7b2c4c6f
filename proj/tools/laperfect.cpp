// Command-line front end: generate, verify, analyze, puncture, count, selftest.
// Exit status: 0 ok, 1 verification failed (or the run itself failed),
// 2 usage or input format error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "laperfect/analysis.hpp"
#include "laperfect/construction.hpp"
#include "laperfect/counting.hpp"
#include "laperfect/io.hpp"
#include "laperfect/selftest.hpp"

using namespace laperfect;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_scale(unsigned n, bool big) {
  if (n > 16 && !big) throw UsageError("length " + std::to_string(n) + " needs --big (about 1.5 GB of memory)");
}

std::string log_line(const char* key, const LogValue& v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s_log2=%.6f\n%s=%s\n", key, v.log2, key, v.power_string().c_str());
  return buf;
}

int cmd_generate(unsigned n, std::uint64_t seed, const std::string& mode, const std::string& tree_in,
                 const std::string& out, const std::string& tree_out, bool big) {
  if (n != 16 && n != 32) throw UsageError("generate supports n=16 and n=32");
  require_scale(n, big);
  std::optional<AssignmentTree> tree;
  if (tree_in.empty()) {
    tree = sample_tree(n, seed, parse_mode(mode));
  } else if (tree_in == "identity") {
    tree = AssignmentTree::identity(n, parse_mode(mode));
  } else {
    tree = parse_tree(read_text_file(tree_in));
    if (tree->length() != n) throw UsageError("tree file is for n=" + std::to_string(tree->length()));
  }
  const CodeSet code = build_code(*tree);
  save_code_file(out, code, true);
  if (!tree_out.empty()) write_text_file(tree_out, serialize_tree(*tree));
  std::cout << "words=" << code.size() << "\n";
  return kOk;
}

int report_perfect_covering(const CodeFile& file) {
  const bool ok = verify_perfect(file.code);
  std::cout << "n=" << file.code.length() << "\ncardinality=" << file.code.size() << "\nperfect=" << ok << "\n";
  return ok ? kOk : kFailed;
}

int cmd_verify(const std::string& path, bool big, bool full_analysis, bool with_kernel) {
  const CodeFile file = load_code_file(path);
  const unsigned n = file.code.length();
  require_scale(n, big);
  if (!is_power_of_two(n)) {
    // A punctured code of length 2^m - 1.
    if (!is_power_of_two(n + 1)) throw UsageError("length must be 2^m or 2^m - 1");
    return report_perfect_covering(file);
  }
  if (!file.code.all_even()) {
    std::cout << "n=" << n << "\ncardinality=" << file.code.size() << "\neven_weight=0\nextended_perfect=0\n";
    return kFailed;
  }
  AnalyzeOptions options{full_analysis, full_analysis && (n <= 16 || with_kernel)};
  const CodeReport report = analyze(file.code, options);
  std::cout << report.render();
  if (file.complete && report.cardinality != report.expected_cardinality) {
    std::cout << "header_complete_mismatch=1\n";
  }
  return report.extended_perfect() ? kOk : kFailed;
}

int cmd_puncture(const std::string& in, const std::string& out, bool big) {
  const CodeFile file = load_code_file(in);
  require_scale(file.code.length(), big);
  const CodeReport report = verify_extended_perfect(file.code);
  if (!report.extended_perfect()) {
    std::cout << report.render();
    return kFailed;
  }
  const CodeSet punctured = puncture(file.code);
  save_code_file(out, punctured, true);
  std::cout << "n=" << punctured.length() << "\nwords=" << punctured.size() << "\n";
  return kOk;
}

int cmd_count(unsigned n, const std::string& what) {
  if (n != 16 && n != 32 && n != 64) throw UsageError("count supports n=16, 32, 64");
  const bool all = what == "all";
  if (what == "exact") {
    std::cout << k_la_exact(n).get_str() << "\n";
    return kOk;
  }
  if (what == "upper") {
    std::cout << k_la_upper(n).get_str() << "\n";
    return kOk;
  }
  if (!all && what != "bounds" && what != "nonequiv" && what != "expansion") {
    throw UsageError("--what must be exact, upper, bounds, nonequiv, expansion or all");
  }
  std::cout << "n=" << n << "\n";
  if (all) {
    const BigCount exact = k_la_exact(n);
    const BigCount upper = k_la_upper(n);
    std::cout << "k_la_exact=" << exact.get_str() << "\n" << log_line("k_la_exact", log2_of(exact));
    std::cout << "k_la_upper=" << upper.get_str() << "\n" << log_line("k_la_upper", log2_of(upper));
  }
  if (all || what == "bounds") {
    const HistoricalBounds b = historical_bounds(n);
    std::cout << log_line("vasilev", b.vasilev) << log_line("krotov2000", b.krotov2000);
    std::cout << log_line("upper_bound_N_eq_n_minus_1", b.upper_n_minus_1) << log_line("upper_bound_N_eq_n", b.upper_n);
  }
  if (all || what == "nonequiv") {
    const NonequivalenceBounds b = nonequivalence_bounds(n);
    std::cout << log_line("nonequivalent_extended", b.extended) << log_line("nonequivalent_perfect", b.punctured);
  }
  if (all || what == "expansion") {
    double sum = 0;
    for (const ExpansionFactor& f : asymptotic_expansion(n)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "factor k=%u log2=%.6f %s\n", f.k, f.value.log2, f.label.c_str());
      std::cout << buf;
      sum += f.value.log2;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "factor_sum_log2=%.6f\n", sum);
    std::cout << buf;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended 1-perfect binary codes from local automorphisms"};
  app.require_subcommand(1);

  unsigned n = 16;
  std::uint64_t seed = 1;
  std::string mode = "la3", tree_in, out, tree_out, input, what = "all", level = "quick";
  bool big = false, no_analysis = false, kernel_flag = false;

  auto* generate = app.add_subcommand("generate", "Build a code from a sampled, identity or stored tree");
  generate->add_option("--n", n, "Code length (16, or 32 with --big)")->required();
  generate->add_option("--seed", seed, "Sampling seed");
  generate->add_option("--mode", mode, "la1, la2 or la3")->check(CLI::IsMember({"la1", "la2", "la3"}));
  generate->add_option("--tree", tree_in, "'identity' or a tree file");
  generate->add_option("--out", out, "Code file to write")->required();
  generate->add_option("--tree-out", tree_out, "Also write the tree");
  generate->add_flag("--big", big, "Allow n=32");

  auto* verify = app.add_subcommand("verify", "Check that a code file holds an extended 1-perfect code");
  verify->add_option("file", input)->required();
  verify->add_flag("--big", big, "Allow n=32");

  auto* analyze_cmd = app.add_subcommand("analyze", "Verify and report rank, rank deficiency and kernel");
  analyze_cmd->add_option("file", input)->required();
  analyze_cmd->add_flag("--big", big, "Allow n=32");
  analyze_cmd->add_flag("--kernel", kernel_flag, "Compute the kernel above n=16 (slow)");
  analyze_cmd->add_flag("--no-invariants", no_analysis, "Skip rank and kernel");

  auto* puncture_cmd = app.add_subcommand("puncture", "Delete the last coordinate of an extended 1-perfect code");
  puncture_cmd->add_option("file", input)->required();
  puncture_cmd->add_option("--out", out)->required();
  puncture_cmd->add_flag("--big", big, "Allow n=32");

  auto* count = app.add_subcommand("count", "Evaluate the counting formulas");
  count->add_option("--n", n)->required();
  count->add_option("--what", what, "exact, upper, bounds, nonequiv, expansion or all");

  auto* selftest = app.add_subcommand("selftest", "Run the brute-force oracle suites");
  selftest->add_option("--n", n)->required();
  selftest->add_option("--level", level, "quick or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(n, seed, mode, tree_in, out, tree_out, big);
    if (verify->parsed()) return cmd_verify(input, big, false, false);
    if (analyze_cmd->parsed()) return cmd_verify(input, big, !no_analysis, kernel_flag);
    if (puncture_cmd->parsed()) return cmd_puncture(input, out, big);
    if (count->parsed()) return cmd_count(n, what);
    if (selftest->parsed()) {
      const SelftestLevel parsed_level = parse_selftest_level(level);
      if (n != 16) throw UsageError("selftest runs at n=16 only");
      return run_selftest(n, parsed_level, std::cout) ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
