#pragma once

// The group G(C) of a cut-diagram: generated by regions, one relation per
// cut-point. A cut-point with incoming region A, outgoing region B, label C and
// sign e contributes B^{-1} C^{-e} A C^{e}, i.e. B = C^{-e} A C^{e}.

#include <vector>

#include "cutdiag/core.hpp"
#include "cutdiag/free_word.hpp"

namespace cutdiag {

struct Presentation {
  std::vector<RegionRef> generators;
  std::vector<RegionWord> relations;
};

Presentation presentation(const CutDiagram& d);

/// Relator contributed by one cut-point.
RegionWord cutpoint_relation(const CutDiagram& d, int component, int position);

struct PathWords {
  RegionWord tilde;      ///< product of label^sign over traversed cut-points
  RegionWord corrected;  ///< R^{-winding} * tilde, R the starting region
  int winding = 0;       ///< sum of exponents whose label lies on the path's component
};

/// Path along component i following the orientation, from gap `from` to gap
/// `to` (gaps are numbered 0..k, gap g precedes cut-point g). On a circle a
/// path with to < from wraps through the basepoint, and (0, k) is the full loop.
PathWords path_word(const CutDiagram& d, int component, int from, int to);

/// Full loop around component i starting at gap `start` (a circle), or the
/// whole interval when the component is an interval and start == 0.
PathWords loop_path(const CutDiagram& d, int component, int start);

/// Full traversal of component i from the canonical basepoint.
RegionWord longitude(const CutDiagram& d, int component);

/// Canonical meridian: region 0 of the component.
RegionRef meridian(const CutDiagram& d, int component);

/// Invariant factors of the abelianization of a finitely presented group.
struct Abelianization {
  int free_rank = 0;
  std::vector<long long> torsion;  ///< invariant factors > 1, ascending divisibility
};

Abelianization abelianization(const Presentation& p);

}  // namespace cutdiag
