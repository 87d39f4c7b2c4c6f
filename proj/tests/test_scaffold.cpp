#include <gtest/gtest.h>

#include "laperfect/scaffold.hpp"
#include "support/generators.hpp"

using namespace laperfect;
using laperfect::testing::seeds;

namespace {

// A^t from the explicit recursion A^t = union over r in V^t of r + A^{t-1}.
CodeSet recursive_a(unsigned n, unsigned t) {
  std::vector<Bits> current{0};
  for (unsigned level = 1; level <= t; ++level) {
    std::vector<Bits> next;
    for (const Word& r : v_set(n, level)) {
      for (Bits a : current) next.push_back(a ^ r.bits());
    }
    current = std::move(next);
  }
  return CodeSet(n, current);
}

CodeSet oracle_theta(const CodeSet& s) {
  const unsigned n = s.length();
  const CodeSet omega(n, laperfect::testing::oracle_neighborhood(s));
  std::vector<Bits> out;
  for (Bits x = 0; x < (Bits{1} << n); ++x) {
    if (std::popcount(x) % 2) continue;
    bool inside = true;
    for (unsigned k = 0; k < n && inside; ++k) inside = omega.contains(x ^ (Bits{1} << k));
    if (inside) out.push_back(x);
  }
  return CodeSet(n, out);
}

}  // namespace

TEST(VSet, Examples) {
  const auto v3 = v_set(16, 3);
  ASSERT_EQ(v3.size(), 2u);
  EXPECT_EQ(v3[0], Word::zero(16));
  EXPECT_EQ(v3[1], Word::from_support(16, {0, 1, 2, 3}));
  EXPECT_EQ(v_set(16, 2).size(), 8u);
  EXPECT_EQ(v_set(16, 1).size(), 128u);
  EXPECT_THROW(v_set(16, 0), std::invalid_argument);
  EXPECT_THROW(v_set(16, 4), std::invalid_argument);
}

TEST(VSet, ShapeAndOrder) {
  for (unsigned t = 1; t <= 3; ++t) {
    const auto v = v_set(16, t);
    const unsigned width = 16 >> t;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Bits w = v[i].bits();
      const Bits row0 = w >> (16 - width);
      const Bits row1 = (w >> (16 - 2 * width)) & low_mask(width);
      EXPECT_EQ(row0, row1);
      EXPECT_EQ(std::popcount(row0) % 2, 0);
      EXPECT_EQ(w & low_mask(16 - 2 * width), 0u);
      EXPECT_TRUE(v_member(v[i], t));
      if (i) EXPECT_LT(v[i - 1], v[i]);
    }
  }
}

TEST(ASet, SizesAndRecursion) {
  const std::size_t sizes[] = {128, 1024, 2048};
  for (unsigned t = 1; t <= 3; ++t) {
    const CodeSet a = a_enumerate(16, t);
    EXPECT_EQ(a.size(), sizes[t - 1]);
    EXPECT_EQ(a, recursive_a(16, t));
    EXPECT_TRUE(a.contains(Bits{0}));
    for (const Word& r : v_set(16, t)) EXPECT_TRUE(a_member(r, t));
    EXPECT_EQ(a_basis(16, t).dimension(), std::bit_width(sizes[t - 1]) - 1);
  }
}

TEST(ASet, MembershipMatchesEnumeration) {
  for (unsigned t = 1; t <= 3; ++t) {
    const CodeSet a = a_enumerate(16, t);
    for (Bits x = 0; x < (1u << 16); x += 7) EXPECT_EQ(a_member(Word(16, x), t), a.contains(x));
  }
}

TEST(Hamming, Examples) {
  const CodeSet h = hamming_code(16);
  EXPECT_EQ(h.size(), 2048u);
  for (Bits a : h.raw()) {
    for (Bits b : h.raw()) {
      if (a < b) ASSERT_GE(std::popcount(a ^ b), 4);
    }
  }
  for (Bits a : h.raw()) ASSERT_TRUE(h.contains(a ^ h.raw()[17]));
  EXPECT_EQ(a_basis(16, 3).dimension(), 11u);
  EXPECT_EQ(hamming_code(4), CodeSet(4, {0b0000, 0b1111}));
}

TEST(Theta, ClosedFormsMatchDefinition) {
  const std::size_t omega_sizes[] = {2048, 16384, 32768};
  const std::size_t theta_sizes[] = {256, 4096, 32768};
  for (unsigned t = 1; t <= 3; ++t) {
    const CodeSet a = a_enumerate(16, t);
    const CodeSet th = oracle_theta(a);
    EXPECT_EQ(theta(a), th);
    EXPECT_EQ(th, scan_space(16, [&](Bits x) { return theta_a_member_bits(x, 16, t); }));
    EXPECT_EQ(th.size(), theta_sizes[t - 1]);
    const CodeSet omega(16, laperfect::testing::oracle_neighborhood(a));
    EXPECT_EQ(omega, scan_space(16, [&](Bits x) { return omega_a_member_bits(x, 16, t); }));
    EXPECT_EQ(omega.size(), omega_sizes[t - 1]);
    if (t < 3) EXPECT_EQ(th.size() / a.size(), 1u << t);
    for (Bits x : a.raw()) EXPECT_TRUE(th.contains(x));
  }
  EXPECT_THROW(theta(CodeSet(16, {1})), std::invalid_argument);
}

TEST(Theta, OmegaExamples) {
  for (unsigned t = 1; t <= 3; ++t) {
    EXPECT_TRUE(omega_a_member(Word::from_support(16, {5}), t));
    EXPECT_FALSE(omega_a_member(Word::zero(16), t));
  }
}

TEST(Theta, NeighborhoodAndClosureEquivalence) {
  // Omega(S) = Omega(S') iff Theta(S) = Theta(S'), with S' built both ways.
  const CodeSet a = a_enumerate(16, 1);
  const CodeSet th = theta(a);
  for (auto seed : seeds(10)) {
    Rng rng(seed);
    std::vector<Bits> same(a.raw().begin(), a.raw().end());
    Bits inside;
    do {
      inside = th.raw()[uniform_below(rng, th.size())];
    } while (a.contains(inside));
    same.push_back(inside);
    std::vector<Bits> different(a.raw().begin(), a.raw().end());
    Bits outside;
    do {
      outside = laperfect::testing::random_even_word(16, rng).bits();
    } while (th.contains(outside));
    different.push_back(outside);
    for (const auto& words : {same, different}) {
      const CodeSet other(16, words);
      EXPECT_EQ(neighborhood(other) == neighborhood(a), theta(other) == th);
    }
    EXPECT_EQ(theta(CodeSet(16, same)), th);
    EXPECT_NE(theta(CodeSet(16, different)), th);
  }
}

TEST(BSet, ClosedFormMatchesDefinition) {
  EXPECT_EQ(b_enumerate(16, 2).size(), 2048u);
  EXPECT_EQ(b_enumerate(16, 3).size(), 8192u);
  for (unsigned t = 2; t <= 3; ++t) {
    const CodeSet definitional = sumset(CodeSet::from_words(v_set(16, t)), oracle_theta(a_enumerate(16, t - 1)));
    EXPECT_EQ(b_enumerate(16, t), definitional);
    EXPECT_EQ(b_definitional(16, t), definitional);
    EXPECT_EQ(std::bit_width(definitional.size()) - 1, b_dimension(16, t));
  }
  EXPECT_EQ(b_enumerate(16, 1), CodeSet::from_words(v_set(16, 1)));
  EXPECT_EQ(b_enumerate(16, 2).size(), theta(a_enumerate(16, 2)).size() / 2);
}

TEST(BSet, Examples) {
  for (unsigned t = 2; t <= 3; ++t) {
    const Word e = Word::from_support(16, {0, 16u >> t});
    EXPECT_EQ(parity_check(e, t), Word::zero(16 >> t));
    EXPECT_FALSE(b_member(e, t));
  }
}

TEST(BSet, LinearSubspace) {
  const CodeSet b = b_enumerate(16, 2);
  for (auto seed : seeds(200)) {
    Rng rng(seed);
    const Bits x = b.raw()[uniform_below(rng, b.size())];
    const Bits y = b.raw()[uniform_below(rng, b.size())];
    EXPECT_TRUE(b.contains(x ^ y));
  }
}

TEST(BSet, ClosedFormAtLengthThirtyTwoIsLinearWithRightDimension) {
  for (unsigned t = 1; t <= 4; ++t) {
    Gf2Basis basis;
    Rng rng(t);
    unsigned found = 0;
    for (int i = 0; i < 200000 && found < 40; ++i) {
      const Bits x = rng() & low_mask(32);
      if (b_member_bits(x, 32, t) && basis.insert(x)) ++found;
    }
    // Random members span B^t, which is closed under the closed form.
    for (Bits r : basis.rows()) EXPECT_TRUE(b_member_bits(r, 32, t));
    if (t > 1) EXPECT_EQ(basis.dimension(), b_dimension(32, t));
  }
}
