#include <gtest/gtest.h>

#include "cutdiag/group.hpp"
#include "cutdiag/parse_io.hpp"
#include "support/corpus.hpp"

using namespace cutdiag;

TEST(ParseCut, SingleEmptyCircle) {
  const CutDiagram d = parse_cut("diagram D\ncomponent 1 circle\nend\n");
  EXPECT_EQ(d.name(), "D");
  EXPECT_EQ(d.num_components(), 1);
  EXPECT_TRUE(d.is_circle(1));
  EXPECT_EQ(d.num_cutpoints(1), 0);
}

TEST(ParseCut, HopfMatchesGauss) {
  const CutDiagram d = parse_cut(
      "diagram hopf\n# two circles\ncomponent 1 circle\n+ 2.0\nend\ncomponent 2 circle\n+ 1.0\nend\n");
  EXPECT_EQ(d, parse_gauss_text("circle O1+ U2+\ncircle O2+ U1+\n"));
}

TEST(ParseCut, DanglingRegionIsSemanticError) {
  try {
    parse_cut("diagram D\ncomponent 1 circle\n+ 3.0\nend\ncomponent 2 circle\nend\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(ParseCut, SyntaxErrorsCarryLineNumbers) {
  try {
    parse_cut("diagram D\ncomponent 1 circle\n\n* 1.0\nend\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(parse_cut("diagram D\ncomponent 2 circle\nend\n"), ParseError);
  EXPECT_THROW(parse_cut("diagram D\ncomponent 1 circle\n"), ParseError);
  EXPECT_THROW(parse_cut(""), ParseError);
}

TEST(WriteCut, EmptyDiagram) { EXPECT_EQ(write_cut(CutDiagram(Skeleton{}, {}, "E")), "diagram E\n"); }

TEST(WriteCut, CanonicalFormIsBitExact) {
  const std::string canonical = "diagram hopf\ncomponent 1 circle\n+ 2.0\nend\ncomponent 2 circle\n+ 1.0\nend\n";
  EXPECT_EQ(write_cut(parse_cut("# header\ndiagram   hopf\ncomponent 1 circle\n  +   2.0\nend\n\ncomponent 2 circle\n+ 1.0\nend")),
            canonical);
}

TEST(WriteCut, RoundTripOnRandomDiagrams) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const CutDiagram d = cutdiag::testing::random_diagram(rng);
    const std::string text = write_cut(d);
    const CutDiagram back = parse_cut(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(write_cut(back), text);
  }
}

TEST(ParseGauss, PositiveKink) {
  const CutDiagram d = parse_gauss_text("circle O1+ U1+");
  ASSERT_EQ(d.num_cutpoints(1), 1);
  EXPECT_EQ(d.cutpoint(1, 0), (CutPoint{1, {1, 0}}));
}

TEST(ParseGauss, Trefoil) {
  const CutDiagram d = parse_gauss_text("circle O1+U2+O3+U1+O2+U3+");
  ASSERT_EQ(d.num_cutpoints(1), 3);
  for (const auto& cp : d.cutpoints(1)) {
    EXPECT_EQ(cp.sign, 1);
    EXPECT_EQ(cp.label.component, 1);
  }
  // tails: O2 sits after U1 (region 1.1... after the first head), and so on
  EXPECT_EQ(d.cutpoint(1, 0).label, (RegionRef{1, 2}));
  EXPECT_EQ(d.cutpoint(1, 1).label, (RegionRef{1, 0}));
  EXPECT_EQ(d.cutpoint(1, 2).label, (RegionRef{1, 1}));
}

TEST(ParseGauss, Errors) {
  EXPECT_THROW(parse_gauss_text("circle O1+ U2+"), ParseError);
  EXPECT_THROW(parse_gauss_text("circle O1+ O1+"), ParseError);
  EXPECT_THROW(parse_gauss_text("circle O1+ U1-"), ParseError);
  EXPECT_THROW(parse_gauss_text("circle X1+"), ParseError);
  EXPECT_THROW(parse_gauss_text("circle O1 U1"), ParseError);
}

TEST(ParseGauss, TailCommuteGivesSameDiagram) {
  // O1 and O2 are adjacent tails in the same region
  const CutDiagram a = parse_gauss_text("circle U3+ O1+ O2- U4+\ncircle U1+ O3+ U2- O4+");
  const CutDiagram b = parse_gauss_text("circle U3+ O2- O1+ U4+\ncircle U1+ O3+ U2- O4+");
  EXPECT_EQ(a, b);
}

TEST(ParseGauss, ClassicalCodesHaveFreeAbelianization) {
  for (const char* name : {"hopf", "trefoil", "whitehead", "borromean"}) {
    const CutDiagram d = cutdiag::testing::load_gauss(name);
    const Abelianization ab = abelianization(presentation(d));
    EXPECT_EQ(ab.free_rank, d.num_components()) << name;
    EXPECT_TRUE(ab.torsion.empty()) << name;
  }
}

TEST(ParseCertificate, IdentityProduct) {
  const auto resolve = [](const std::string&) { return CutDiagram(Skeleton{{ComponentKind::circle}}, {{}}, "D"); };
  const Certificate c = parse_certificate("from D\nmode strict\nevents\nend\n", resolve);
  EXPECT_EQ(c.from_name, "D");
  EXPECT_TRUE(c.events.empty());
  EXPECT_EQ(c.mode, CertificateMode::strict);
  EXPECT_TRUE(verify(c).accepted);
}

TEST(ParseCertificate, TrefoilSliceFile) {
  const Certificate c =
      parse_certificate(cutdiag::testing::read_file(cutdiag::testing::data_path("trefoil-slice.cmov")), cutdiag::testing::data_resolver());
  EXPECT_EQ(c.events.size(), 3u);
  EXPECT_TRUE(verify(c).accepted);
}

TEST(ParseCertificate, ReducedEventInStrictModeIsAnError) {
  const auto resolve = [](const std::string&) { return CutDiagram(Skeleton{{ComponentKind::circle}}, {{}}, "D"); };
  EXPECT_THROW(parse_certificate("from D\nmode strict\nevents\nsvdeath 1 0\nend\n", resolve), ParseError);
  EXPECT_NO_THROW(parse_certificate("from D\nmode reduced\nevents\nsvdeath 1 0\nend\n", resolve));
  EXPECT_THROW(parse_certificate("from D\nmode strict\nevents\nexplode 1 0\nend\n", resolve), ParseError);
  EXPECT_THROW(parse_certificate("from D\nmode strict\nevents\n", resolve), ParseError);
}

TEST(ParseCertificate, RoundTrip) {
  const std::string text =
      "from a\nto b\nmode reduced\nevents\nproduct\nvdeath 1 0\nvbirth 1 2 down 2.1\nsvdeath 2 0\n"
      "svbirth 1 0 up 1.0\nmin 1 0 down,up 2.0\nmax 1 3\npass 2 1 under 1.0\nend\n";
  const auto resolve = [](const std::string& n) { return CutDiagram(Skeleton{}, {}, n); };
  EXPECT_EQ(write_certificate(parse_certificate(text, resolve)), text);
}
