#include <gtest/gtest.h>

#include "cutdiag/group.hpp"
#include "cutdiag/magnus.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace cutdiag;

namespace {

MeridianWord to_word(const oracle::Word& w) {
  MeridianWord out;
  for (auto [g, e] : w) out.push_back(g, e);
  return out;
}

MeridianWord R(int i, int e = 1) { return MeridianWord::generator(i, e); }

}  // namespace

TEST(Series, GeneratorPowerBinomials) {
  const TruncatedSeries s = TruncatedSeries::generator_power(1, 5, 1, -2);
  // (1 + X)^-2 = 1 - 2X + 3X^2 - 4X^3 + 5X^4
  EXPECT_EQ(s.coefficient(std::vector<int>{1}), -2);
  EXPECT_EQ(s.coefficient(std::vector<int>{1, 1}), 3);
  EXPECT_EQ(s.coefficient(std::vector<int>{1, 1, 1}), -4);
  EXPECT_EQ(s.coefficient(std::vector<int>{1, 1, 1, 1}), 5);
}

TEST(Series, InverseAndRing) {
  const TruncatedSeries a = expand(R(1) * R(2) * R(1, -3), 5, 2);
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a + TruncatedSeries::zero(2, 5), a);
}

TEST(Series, ReducedKillsRepeats) {
  const TruncatedSeries s = reduced_expand(R(1) * R(2), 4, 2);
  EXPECT_EQ(s.coefficient(std::vector<int>{1, 2}), 1);
  EXPECT_EQ(s.coefficient(std::vector<int>{2, 1}), 0);
  EXPECT_EQ(reduced_expand(R(1, 3), 4, 1).coefficient(std::vector<int>{1, 1}), 0);
}

TEST(Expand, Examples) {
  EXPECT_TRUE(expand(MeridianWord{}, 4, 2).is_one());
  const TruncatedSeries c = expand(commutator(R(1), R(2)), 3, 2);
  EXPECT_EQ(c.coefficient(std::vector<int>{1, 2}), 1);
  EXPECT_EQ(c.coefficient(std::vector<int>{2, 1}), -1);
}

TEST(Expand, MatchesOracleOnRandomWords) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> gen(1, 3), ex(-2, 2), len(0, 8);
  for (int t = 0; t < 200; ++t) {
    oracle::Word w;
    for (int k = len(rng); k > 0; --k) w.push_back({gen(rng), ex(rng)});
    const oracle::Poly p = oracle::expand(w, 5);
    const TruncatedSeries s = expand(to_word(w), 5, 3);
    for (const auto& [seq, c] : p.c) EXPECT_EQ(s.coefficient(seq), Integer(c));
    for (const auto& [seq, c] : s.coefficients()) EXPECT_EQ(c, Integer(p.at(seq)));
  }
}

TEST(InLcs, Commutators) {
  EXPECT_TRUE(in_lcs(MeridianWord{}, 7));
  EXPECT_FALSE(in_lcs(R(1), 2));
  EXPECT_TRUE(in_lcs(commutator(R(1), R(2)), 2));
  EXPECT_FALSE(in_lcs(commutator(R(1), R(2)), 3));
  EXPECT_TRUE(in_lcs(commutator(commutator(R(1), R(2)), R(1)), 3));
}

TEST(HallBasis, WitnessCounts) {
  // Witt's formula
  const auto count = [](int n, int w) {
    int c = 0;
    for (const auto& b : oracle::hall_basis(n, w))
      if (b.weight == w) ++c;
    return c;
  };
  EXPECT_EQ(count(2, 2), 1);
  EXPECT_EQ(count(2, 3), 2);
  EXPECT_EQ(count(2, 4), 3);
  EXPECT_EQ(count(3, 3), 8);
  EXPECT_EQ(count(3, 4), 18);
}

TEST(InLcs, BasicCommutatorsHaveExactWeight) {
  for (const auto& b : oracle::hall_basis(3, 4)) {
    const MeridianWord w = to_word(b.word);
    EXPECT_TRUE(in_lcs(w, b.weight));
    EXPECT_FALSE(in_lcs(w, b.weight + 1));
  }
}

TEST(Order, LengthThenLex) {
  const SequenceLess less;
  EXPECT_TRUE(less({2}, {1, 1}));
  EXPECT_TRUE(less({1, 2}, {2, 1}));
  EXPECT_FALSE(less({1, 2}, {1, 2}));
}

TEST(MilnorTable, Hopf) {
  const MilnorTable t = milnor_table(cutdiag::testing::load_cut("hopf"), 2);
  ASSERT_EQ(t.entries().size(), 4u);
  EXPECT_EQ(t.at({1, 2}), (MilnorEntry{1, 0}));
  EXPECT_EQ(t.at({2, 1}), (MilnorEntry{1, 0}));
  EXPECT_EQ(t.at({1, 1}).value, 0);
  EXPECT_EQ(t.to_text(), "1 2 : 1\n2 1 : 1\n");
}

TEST(MilnorTable, UnknotIsEmpty) {
  const MilnorTable t = milnor_table(cutdiag::testing::load_cut("unknot"), 4);
  EXPECT_EQ(t.to_text(), "");
}

TEST(MilnorTable, LengthTwoIsLinkingNumber) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const CutDiagram d = cutdiag::testing::random_diagram(rng);
    const MilnorTable tab = milnor_table(d, 2);
    const IntMatrix lk = linking_matrix(d);
    for (int i = 1; i <= d.num_components(); ++i)
      for (int j = 1; j <= d.num_components(); ++j)
        if (i != j) {
          EXPECT_EQ(tab.at({i, j}).value, Integer(lk(i, j)));
          EXPECT_EQ(tab.at({i, j}).modulus, 0);
        }
  }
}

TEST(MilnorTable, EntriesAreLongitudeCoefficients) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 40; ++t) {
    const CutDiagram d = cutdiag::testing::random_diagram(rng);
    const MilnorTable tab = milnor_table(d, 4);
    for (int j = 1; j <= d.num_components(); ++j) {
      const oracle::Poly p = oracle::longitude_expansion(d, j, 4);
      for (const auto& [s, e] : tab.entries()) {
        if (s.back() != j) continue;
        const std::vector<int> I(s.begin(), s.end() - 1);
        Integer expect = p.at(I);
        if (e.modulus > 0) {
          expect %= e.modulus;
          if (expect < 0) expect += e.modulus;
        }
        EXPECT_EQ(e.value, expect) << to_string(s);
      }
    }
  }
}

TEST(MilnorTable, Whitehead) {
  const MilnorTable t = milnor_table(cutdiag::testing::load_cut("whitehead"), 4);
  EXPECT_EQ(t.at({1, 2}).value, 0);
  EXPECT_EQ(abs(t.at({1, 1, 2, 2}).value), 1);
  EXPECT_EQ(t.at({1, 1, 2, 2}).modulus, 0);
  EXPECT_EQ(reduced_milnor_table(cutdiag::testing::load_cut("whitehead"), 4).to_text(), "");
}

TEST(MilnorTable, Borromean) {
  const MilnorTable t = milnor_table(cutdiag::testing::load_cut("borromean"), 3);
  EXPECT_EQ(abs(t.at({1, 2, 3}).value), 1);
  EXPECT_EQ(t.at({1, 2, 3}).modulus, 0);
  const MilnorTable r = reduced_milnor_table(cutdiag::testing::load_cut("borromean"), 3);
  EXPECT_EQ(abs(r.at({1, 2, 3}).value), 1);
}

TEST(Indeterminacy, GcdOfShorterRotations) {
  MilnorTable t(3, 3, false);
  t.set({1, 2}, {4, 0});
  t.set({2, 1}, {4, 0});
  t.set({2, 3}, {6, 0});
  t.set({3, 2}, {6, 0});
  t.set({1, 3}, {0, 0});
  t.set({3, 1}, {0, 0});
  EXPECT_EQ(indeterminacy(t, {1, 2, 3}), 2);
  EXPECT_EQ(indeterminacy(t, {1, 2}), 0);
  EXPECT_THROW(indeterminacy(MilnorTable(3, 3, false), {1, 2, 3}), Error);
}

TEST(MilnorTable, ValuesReducedIntoRange) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 40; ++t) {
    const MilnorTable tab = milnor_table(cutdiag::testing::random_diagram(rng), 4);
    for (const auto& [s, e] : tab.entries())
      if (e.modulus > 0) {
        EXPECT_GE(e.value, 0);
        EXPECT_LT(e.value, e.modulus);
      }
  }
}

TEST(FirstDifference, UsesLargerModulus) {
  MilnorTable a(2, 2, false), b(2, 2, false);
  a.set({1, 2}, {1, 3});
  b.set({1, 2}, {4, 0});
  EXPECT_FALSE(first_difference(a, b).has_value());
  b.set({1, 2}, {5, 0});
  EXPECT_EQ(first_difference(a, b), (Sequence{1, 2}));
}

TEST(ChenStability, LevelsAgreeBelowDegree) {
  for (const char* name : {"hopf", "trefoil", "whitehead", "borromean"}) {
    const CutDiagram d = cutdiag::testing::load_cut(name);
    const int n = d.num_components();
    for (int q = 2; q <= 4; ++q) {
      const RoadNetwork net = canonical_network(d);
      const ChenMap lo(d, net, q), hi(d, net, q + 1);
      for (int j = 1; j <= n; ++j) {
        const TruncatedSeries a = expand(lo(longitude(d, j)), q, n);
        const TruncatedSeries b = expand(hi(longitude(d, j)), q, n);
        EXPECT_EQ(a, b) << name;
      }
    }
  }
}
