#pragma once

// Road networks and Chen maps.
//
// A road network picks, on each component, a basepoint region and for every
// region a path from the basepoint to it, stored as the word of labels met on
// the way. The Chen maps eta_q send region generators to words in the n
// meridians:
//   eta_1(R_ij)     = R_i
//   eta_{q+1}(R_ij) = eta_q(v_ij)^{-1} R_i eta_q(v_ij),   v_ij the road word.

#include <map>
#include <vector>

#include "cutdiag/core.hpp"
#include "cutdiag/free_word.hpp"

namespace cutdiag {

struct ComponentRoads {
  int basepoint_region = 0;
  std::vector<RegionWord> roads;  ///< roads[j] leads to region j
};

struct RoadNetwork {
  std::vector<ComponentRoads> components;

  int basepoint_region(int component) const;
  const RegionWord& road(const RegionRef& region) const;
  bool covers(const CutDiagram& d) const;
};

/// Orientation-order prefix roads from region 0.
RoadNetwork canonical_network(const CutDiagram& d);

/// Network based at gap basepoint_gaps[i-1] of each component; on circles the
/// road to a region first runs windings[i-1] full loops (windings may be empty,
/// meaning zero). Interval components must be based at gap 0.
RoadNetwork based_network(const CutDiagram& d, const std::vector<int>& basepoint_gaps,
                          const std::vector<int>& windings = {});

/// eta_q for a fixed diagram, network and level. Images of all regions are
/// computed once at construction.
class ChenMap {
public:
  ChenMap(const CutDiagram& d, RoadNetwork network, int q);

  int level() const noexcept { return q_; }
  const RoadNetwork& network() const noexcept { return network_; }

  const MeridianWord& image(const RegionRef& region) const;
  MeridianWord operator()(const RegionWord& w) const;

private:
  int q_;
  RoadNetwork network_;
  std::map<RegionRef, MeridianWord> images_;
};

MeridianWord chen_map(const CutDiagram& d, const RoadNetwork& network, int q, const RegionWord& w);

/// Meridians R_1..R_n, the lower central series term F_q, and one relation
/// [R_i, eta_q(lambda_i)] per circle component. Interval components carry none.
struct NilPresentation {
  int q = 1;
  int num_meridians = 0;
  std::vector<std::pair<int, MeridianWord>> commutation_relations;  ///< (i, eta_q(lambda_i))

  std::vector<MeridianWord> relators() const;
};

NilPresentation nilpotent_presentation(const CutDiagram& d, int q);

/// Re-expresses a word in the meridians of `from` in the meridians of `to`:
/// R_i becomes eta'_q(nu_i)^{-1} R'_i eta'_q(nu_i), with nu_i the road of `to`
/// leading to the basepoint region of `from` on component i.
MeridianWord rewrite_network(const CutDiagram& d, const RoadNetwork& from, const RoadNetwork& to, int q,
                             const MeridianWord& w);

}  // namespace cutdiag
