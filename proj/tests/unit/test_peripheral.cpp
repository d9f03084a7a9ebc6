#include <gtest/gtest.h>

#include "cutdiag/peripheral.hpp"
#include "support/corpus.hpp"

using namespace cutdiag;

TEST(Peripheral, HopfSystem) {
  const NilPeripheralSystem s = peripheral_system(cutdiag::testing::load_cut("hopf"), 3);
  ASSERT_EQ(s.meridians.size(), 2u);
  EXPECT_EQ(s.meridians[0], MeridianWord::generator(1));
  EXPECT_EQ(s.longitudes[0], MeridianWord::generator(2));
  EXPECT_EQ(s.presentation.commutation_relations.size(), 2u);
  EXPECT_EQ(s.comparison[0], LongitudeComparison::up_to_conjugation);
}

TEST(Peripheral, IntervalLongitudesCompareExactly) {
  const CutDiagram d(Skeleton{{ComponentKind::interval, ComponentKind::circle}}, {{{1, {2, 0}}}, {}});
  const NilPeripheralSystem s = peripheral_system(d, 2);
  EXPECT_EQ(s.comparison[0], LongitudeComparison::exact);
  EXPECT_TRUE(s.presentation.commutation_relations.size() == 1u);
}

TEST(ReducedPeripheral, WhiteheadIsTrivial) {
  EXPECT_TRUE(reduced_peripheral(cutdiag::testing::load_cut("whitehead"), 5).trivial());
  EXPECT_FALSE(reduced_peripheral(cutdiag::testing::load_cut("hopf"), 3).trivial());
  EXPECT_FALSE(reduced_peripheral(cutdiag::testing::load_cut("borromean"), 4).trivial());
}

TEST(ReducedPeripheral, CosetsDropOwnMeridian) {
  const ReducedPeripheralData r = reduced_peripheral(cutdiag::testing::load_cut("trefoil"), 4);
  ASSERT_EQ(r.longitude_cosets.size(), 1u);
  EXPECT_TRUE(r.longitude_cosets[0].empty());
}

TEST(SameInvariants, Examples) {
  const CutDiagram w = cutdiag::testing::load_cut("whitehead");
  const CutDiagram u = cutdiag::testing::load_cut("unlink2");
  const Verdict strict = same_invariants(w, u, 4);
  EXPECT_TRUE(strict.distinguished);
  EXPECT_EQ(strict.witness, (Sequence{1, 1, 2, 2}));
  EXPECT_FALSE(same_invariants(w, u, 4, true).distinguished);
  EXPECT_FALSE(same_invariants(w, w, 4).distinguished);
  EXPECT_TRUE(same_invariants(cutdiag::testing::load_cut("hopf"), u, 2).distinguished);
  EXPECT_THROW(same_invariants(w, cutdiag::testing::load_cut("unknot"), 2), Error);
}
