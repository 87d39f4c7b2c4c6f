#include <gtest/gtest.h>

#include "laperfect/io.hpp"
#include "laperfect/scaffold.hpp"

using namespace laperfect;

namespace {

bool fails_with(const std::string& text, const std::string& fragment) {
  try {
    parse_code(text);
  } catch (const FormatError& e) {
    return std::string(e.what()).find(fragment) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST(CodeFile, RoundTrip) {
  const CodeSet h = hamming_code(16);
  const std::string text = serialize_code(h, true);
  EXPECT_EQ(text.substr(0, 35), "n=16 complete=1\n0000000000000000\n00");
  const CodeFile file = parse_code(text);
  EXPECT_TRUE(file.complete);
  EXPECT_EQ(file.code, h);
  EXPECT_EQ(serialize_code(file.code, file.complete), text);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2049);
}

TEST(CodeFile, HeaderWithoutFlag) {
  const CodeFile file = parse_code("n=3\n000\n111\n");
  EXPECT_FALSE(file.complete);
  EXPECT_EQ(file.code, CodeSet(3, {0, 7}));
  EXPECT_EQ(serialize_code(file.code, false), "n=3\n000\n111\n");
}

TEST(CodeFile, Errors) {
  EXPECT_TRUE(fails_with("", "line 1"));
  EXPECT_TRUE(fails_with("x=3\n", "line 1"));
  EXPECT_TRUE(fails_with("n=3 bogus=1\n", "line 1"));
  EXPECT_TRUE(fails_with("n=3\n000\n11\n", "line 3"));
  EXPECT_TRUE(fails_with("n=3\n000\n1a1\n", "line 3"));
  EXPECT_TRUE(fails_with("n=3\n111\n000\n", "ascending"));
  EXPECT_TRUE(fails_with("n=3\n000\n000\n", "duplicate"));
}

TEST(CodeFile, CountIsNotEnforcedByTheParser) {
  // verify reports the size mismatch instead.
  const CodeFile file = parse_code("n=16 complete=1\n0000000000000000\n");
  EXPECT_TRUE(file.complete);
  EXPECT_EQ(file.code.size(), 1u);
}
