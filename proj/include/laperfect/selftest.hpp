#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

namespace laperfect {

enum class SelftestLevel { Quick, Full };

SelftestLevel parse_selftest_level(std::string_view text);

/// Brute-force oracle suites at n = 16. Prints one line per suite and
/// returns true when all pass. Throws std::invalid_argument for other n.
bool run_selftest(unsigned n, SelftestLevel level, std::ostream& out);

}  // namespace laperfect
