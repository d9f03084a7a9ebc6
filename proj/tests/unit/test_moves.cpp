#include <gtest/gtest.h>

#include "cutdiag/magnus.hpp"
#include "cutdiag/moves.hpp"
#include "support/corpus.hpp"

using namespace cutdiag;

namespace {

CutDiagram one_circle(std::vector<CutPoint> cps) {
  return CutDiagram(Skeleton{{ComponentKind::circle}}, {std::move(cps)});
}

}  // namespace

TEST(MoveText, RoundTrip) {
  for (const char* s : {"R1+@1:0:+:before", "R1-@2:3", "R2+@1:2:-:2.1", "R2-@1:0", "R3@1:1:second:1.2",
                        "SV+@2:0:+:2.0:1", "SV-@1:4", "R1+@1:1:-:after:3"}) {
    EXPECT_EQ(format_move(parse_move(s)), s);
  }
  EXPECT_THROW(parse_move("R4@1:0"), Error);
  EXPECT_THROW(parse_move("R1-@x"), Error);
}

TEST(MoveSetMembership, Families) {
  EXPECT_TRUE(in_move_set(MoveKind::R3, MoveSet::topological));
  EXPECT_FALSE(in_move_set(MoveKind::SVPlus, MoveSet::topological));
  EXPECT_TRUE(in_move_set(MoveKind::SVMinus, MoveSet::self_virtual));
  EXPECT_FALSE(in_move_set(MoveKind::R2Plus, MoveSet::self_virtual));
  EXPECT_TRUE(in_move_set(MoveKind::R2Plus, MoveSet::all));
}

TEST(R1, InsertKinkOnUnknotThenRemoveIt) {
  const CutDiagram u = cutdiag::testing::load_cut("unknot");
  const CutDiagram k = apply_move(u, parse_move("R1+@1:0:+:before"));
  ASSERT_EQ(k.num_cutpoints(1), 1);
  EXPECT_EQ(k.cutpoint(1, 0).sign, 1);
  EXPECT_EQ(apply_move(k, parse_move("R1-@1:0")), u);
}

TEST(R1, RemovalNeedsAdjacentLabel) {
  // the label of a kink must be one of its two neighboring regions
  const CutDiagram d(Skeleton{{ComponentKind::circle, ComponentKind::circle}},
                     {{{1, {2, 0}}}, {{1, {1, 0}}}});
  EXPECT_THROW(apply_move(d, parse_move("R1-@1:0")), Error);
}

TEST(R2, InsertAndRemoveOppositePair) {
  const CutDiagram h = cutdiag::testing::load_cut("hopf");
  const CutDiagram d = apply_move(h, parse_move("R2+@1:0:+:2.0"));
  ASSERT_EQ(d.num_cutpoints(1), 3);
  EXPECT_EQ(d.cutpoint(1, 0).sign, -d.cutpoint(1, 1).sign);
  EXPECT_EQ(d.cutpoint(1, 0).label, d.cutpoint(1, 1).label);
  EXPECT_EQ(apply_move(d, parse_move("R2-@1:0")), h);
}

TEST(R2, RemovalRequiresOppositeSignsAndEqualLabels) {
  const CutDiagram d = one_circle({{1, {1, 0}}, {1, {1, 0}}});
  EXPECT_THROW(apply_move(d, parse_move("R2-@1:0")), Error);
}

TEST(Enumerate, UnknotOffersOnlyInsertions) {
  for (const auto& m : enumerate_moves(cutdiag::testing::load_cut("unknot"))) EXPECT_TRUE(is_insertion(m.kind));
}

TEST(Enumerate, SortedAndApplicable) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    const CutDiagram d = cutdiag::testing::random_diagram(rng, 3, 5);
    const auto ms = enumerate_moves(d);
    EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end(), move_less));
    for (const auto& m : ms) {
      CutDiagram out;
      ASSERT_NO_THROW(out = apply_move(d, m)) << format_move(m) << "\n" << write_cut(d);
      EXPECT_TRUE(validate_diagram(out).ok());
    }
  }
}

TEST(Enumerate, InsertionsHaveInverses) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const CutDiagram d = cutdiag::testing::random_diagram(rng, 2, 4);
    for (const auto& m : enumerate_moves(d)) {
      if (m.kind != MoveKind::R1Plus && m.kind != MoveKind::R2Plus && m.kind != MoveKind::SVPlus) continue;
      const CutDiagram out = apply_move(d, m);
      MoveInstance inv;
      inv.kind = m.kind == MoveKind::R1Plus ? MoveKind::R1Minus
                 : m.kind == MoveKind::R2Plus ? MoveKind::R2Minus
                                              : MoveKind::SVMinus;
      inv.component = m.component;
      inv.position = m.position;
      // R1 insertions at the end of a circle land on the last slot
      if (inv.position >= out.num_cutpoints(m.component)) inv.position = out.num_cutpoints(m.component) - 1;
      EXPECT_NO_THROW(apply_move(out, inv)) << format_move(m);
    }
  }
}

TEST(R3, IsAnInvolutionUpToRelabel) {
  const CutDiagram t = cutdiag::testing::load_cut("trefoil");
  for (const auto& m : enumerate_moves(t)) {
    if (m.kind != MoveKind::R3) continue;
    const CutDiagram out = apply_move(t, m);
    EXPECT_EQ(linking_matrix(out), linking_matrix(t));
  }
}

TEST(SV, RequiresSelfLabel) {
  const CutDiagram h = cutdiag::testing::load_cut("hopf");
  EXPECT_THROW(apply_move(h, parse_move("SV-@1:0")), Error);
  const CutDiagram k = one_circle({{1, {1, 0}}});
  EXPECT_NO_THROW(apply_move(k, parse_move("SV-@1:0")));
}

TEST(RegionBeforeMove, MapsSplitPiecesBack) {
  const CutDiagram h = cutdiag::testing::load_cut("hopf");
  const MoveInstance m = parse_move("R2+@1:1:+:2.0");
  const CutDiagram d = apply_move(h, m);
  for (const auto& r : d.regions()) {
    const RegionRef back = region_before_move(h, m, r);
    EXPECT_EQ(back.component, r.component);
    EXPECT_LT(back.region, region_count(h, back.component));
  }
}

TEST(RandomWalk, DeterministicPerSeed) {
  const CutDiagram h = cutdiag::testing::load_cut("hopf");
  const Walk a = random_walk_trace(h, 20, 99);
  const Walk b = random_walk_trace(h, 20, 99);
  EXPECT_EQ(a.result, b.result);
  EXPECT_EQ(a.moves, b.moves);
  EXPECT_EQ(random_walk(h, 0, 5), h);
}

TEST(RandomWalk, FoldOfMovesGivesResult) {
  const CutDiagram w = cutdiag::testing::load_cut("whitehead");
  const Walk walk = random_walk_trace(w, 25, 3, MoveSet::all);
  CutDiagram cur = w;
  for (const auto& m : walk.moves) cur = apply_move(cur, m);
  EXPECT_EQ(cur, walk.result);
}

TEST(RandomWalk, PreservesLinkingMatrixOffDiagonal) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const CutDiagram d = cutdiag::testing::random_diagram(rng);
    const CutDiagram e = random_walk(d, 20, t);
    const IntMatrix a = linking_matrix(d), b = linking_matrix(e);
    for (int i = 1; i <= d.num_components(); ++i)
      for (int j = 1; j <= d.num_components(); ++j)
        if (i != j) EXPECT_EQ(a(i, j), b(i, j));
  }
}

TEST(RandomWalk, MilnorTablesInvariant) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const CutDiagram d = cutdiag::testing::random_diagram(rng);
    const CutDiagram e = random_walk(d, 15, 1000 + t);
    EXPECT_FALSE(first_difference(milnor_table(d, 3), milnor_table(e, 3)).has_value()) << write_cut(d);
  }
}
