#include <gtest/gtest.h>

#include "cutdiag/chen.hpp"
#include "cutdiag/group.hpp"
#include "cutdiag/magnus.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace cutdiag;

TEST(Network, CanonicalRoadsArePrefixes) {
  const CutDiagram t = cutdiag::testing::load_cut("trefoil");
  const RoadNetwork net = canonical_network(t);
  EXPECT_TRUE(net.covers(t));
  EXPECT_EQ(net.basepoint_region(1), 0);
  EXPECT_TRUE(net.road({1, 0}).empty());
  for (int r = 1; r < 3; ++r) EXPECT_EQ(net.road({1, r}), path_word(t, 1, 0, r).tilde);
}

TEST(Network, BasedNetworkRejectsIntervalBasepoints) {
  const CutDiagram d(Skeleton{{ComponentKind::interval}}, {{{1, {1, 1}}}});
  EXPECT_THROW(based_network(d, {1}), Error);
  EXPECT_NO_THROW(based_network(d, {0}));
}

TEST(Network, BasedNetworkCoversAndStartsAtBasepoint) {
  const CutDiagram t = cutdiag::testing::load_cut("trefoil");
  for (int b = 0; b <= 3; ++b) {
    const RoadNetwork net = based_network(t, {b}, {1});
    EXPECT_TRUE(net.covers(t));
    EXPECT_EQ(net.basepoint_region(1), t.gap_region(1, b));
  }
}

TEST(ChenMap, LevelOneIsAbelianization) {
  const CutDiagram t = cutdiag::testing::load_cut("trefoil");
  const ChenMap eta(t, canonical_network(t), 1);
  for (const auto& r : t.regions()) EXPECT_EQ(eta.image(r), MeridianWord::generator(1));
  EXPECT_THROW(ChenMap(t, canonical_network(t), 0), Error);
}

TEST(ChenMap, HopfLevelTwo) {
  const CutDiagram h = cutdiag::testing::load_cut("hopf");
  const ChenMap eta(h, canonical_network(h), 2);
  EXPECT_EQ(eta(longitude(h, 1)), MeridianWord::generator(2));
}

TEST(ChenMap, RecursionMatchesDefinition) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const CutDiagram d = cutdiag::testing::random_diagram(rng);
    const RoadNetwork net = canonical_network(d);
    const ChenMap lo(d, net, 2), hi(d, net, 3);
    for (const auto& r : d.regions()) {
      const MeridianWord v = lo(net.road(r));
      EXPECT_EQ(hi.image(r), v.inverse() * MeridianWord::generator(r.component) * v);
    }
  }
}

TEST(ChenMap, LongitudeExpansionMatchesOracle) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 60; ++t) {
    const CutDiagram d = cutdiag::testing::random_diagram(rng);
    const int q = 4;
    const ChenMap eta(d, canonical_network(d), q);
    for (int j = 1; j <= d.num_components(); ++j) {
      const TruncatedSeries s = expand(eta(longitude(d, j)), q, d.num_components());
      const oracle::Poly p = oracle::longitude_expansion(d, j, q);
      for (const auto& [seq, c] : s.coefficients()) EXPECT_EQ(c, Integer(p.at(seq))) << to_string(seq);
      for (const auto& [seq, c] : p.c) EXPECT_EQ(s.coefficient(seq), Integer(c)) << to_string(seq);
    }
  }
}

TEST(ChenSeriesTest, AgreesWithExpandedChenMap) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const CutDiagram d = cutdiag::testing::random_diagram(rng);
    const RoadNetwork net = based_network(d, std::vector<int>(d.num_components(), 0));
    const int n = d.num_components();
    const ChenMap eta(d, net, 4);
    const ChenSeries series(d, net, 4);
    for (const auto& r : d.regions()) EXPECT_EQ(series.image(r), expand(eta.image(r), 4, n));
  }
}

TEST(NilPresentation, OneRelationPerCircle) {
  const CutDiagram d(Skeleton{{ComponentKind::circle, ComponentKind::interval}}, {{{1, {2, 1}}}, {{1, {1, 0}}}});
  const NilPresentation p = nilpotent_presentation(d, 3);
  ASSERT_EQ(p.commutation_relations.size(), 1u);
  EXPECT_EQ(p.commutation_relations[0].first, 1);
  EXPECT_EQ(p.relators().size(), 1u);
}

TEST(RewriteNetwork, IdentityWhenNetworksCoincide) {
  const CutDiagram w = cutdiag::testing::load_cut("whitehead");
  const RoadNetwork net = canonical_network(w);
  const MeridianWord x = MeridianWord::generator(1) * MeridianWord::generator(2, -1);
  EXPECT_EQ(rewrite_network(w, net, net, 3, x), x);
}

TEST(RewriteNetwork, MovesLongitudesBetweenNetworks) {
  // rewriting the longitude images of one network gives those of the other
  // up to conjugation, which leaves the leading Milnor numbers alone
  const CutDiagram w = cutdiag::testing::load_cut("whitehead");
  const int q = 5;
  const RoadNetwork a = canonical_network(w);
  const RoadNetwork b = based_network(w, {1, 2});
  const ChenMap eta_a(w, a, q);
  std::vector<TruncatedSeries> longs;
  for (int j = 1; j <= 2; ++j)
    longs.push_back(expand(rewrite_network(w, a, b, q, eta_a(longitude(w, j))), q, 2));
  const MilnorTable rewritten = milnor_table_from_longitudes(w.skeleton(), longs, 4, false);
  EXPECT_FALSE(first_difference(rewritten, milnor_table(w, b, 4)).has_value());
}
