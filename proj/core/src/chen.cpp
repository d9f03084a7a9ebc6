#include "cutdiag/chen.hpp"

#include "cutdiag/group.hpp"

namespace cutdiag {

int RoadNetwork::basepoint_region(int component) const {
  if (component < 1 || component > static_cast<int>(components.size()))
    throw Error("road network has no component " + std::to_string(component));
  return components[component - 1].basepoint_region;
}

const RegionWord& RoadNetwork::road(const RegionRef& region) const {
  if (region.component < 1 || region.component > static_cast<int>(components.size()))
    throw Error("road network does not cover region " + to_string(region));
  const auto& roads = components[region.component - 1].roads;
  if (region.region < 0 || region.region >= static_cast<int>(roads.size()))
    throw Error("road network does not cover region " + to_string(region));
  return roads[region.region];
}

bool RoadNetwork::covers(const CutDiagram& d) const {
  if (static_cast<int>(components.size()) != d.num_components()) return false;
  for (int i = 1; i <= d.num_components(); ++i) {
    const auto& c = components[i - 1];
    if (static_cast<int>(c.roads.size()) != region_count(d, i)) return false;
    if (c.basepoint_region < 0 || c.basepoint_region >= region_count(d, i)) return false;
    if (!c.roads[c.basepoint_region].empty()) return false;
  }
  return true;
}

RoadNetwork canonical_network(const CutDiagram& d) {
  return based_network(d, std::vector<int>(d.num_components(), 0));
}

RoadNetwork based_network(const CutDiagram& d, const std::vector<int>& basepoint_gaps,
                          const std::vector<int>& windings) {
  const int n = d.num_components();
  if (static_cast<int>(basepoint_gaps.size()) != n) throw Error("one basepoint per component is required");
  if (!windings.empty() && static_cast<int>(windings.size()) != n)
    throw Error("windings must be empty or one per component");

  RoadNetwork net;
  for (int i = 1; i <= n; ++i) {
    const int k = d.num_cutpoints(i);
    int b = basepoint_gaps[i - 1];
    const int m = windings.empty() ? 0 : windings[i - 1];
    if (b < 0 || b > k) throw Error("basepoint gap out of range on component " + std::to_string(i));
    if (!d.is_circle(i) && (b != 0 || m != 0))
      throw Error("interval component " + std::to_string(i) + " has its canonical basepoint only");
    if (m < 0) throw Error("windings follow the orientation and must be nonnegative");
    if (d.is_circle(i) && b == k) b = 0;

    ComponentRoads roads;
    roads.basepoint_region = d.gap_region(i, b);
    const RegionWord loop = m > 0 ? loop_path(d, i, b).tilde.pow(m) : RegionWord{};
    for (int j = 0; j < region_count(d, i); ++j) {
      if (j == roads.basepoint_region) {
        roads.roads.emplace_back();
        continue;
      }
      // gap representing region j, reached forward from b
      const int g = (j == 0) ? k : j;
      RegionWord path;
      if (g >= b) {
        path = path_word(d, i, b, g).tilde;
      } else {
        path = path_word(d, i, b, k).tilde * path_word(d, i, 0, g).tilde;
      }
      roads.roads.push_back(loop * path);
    }
    net.components.push_back(std::move(roads));
  }
  return net;
}

ChenMap::ChenMap(const CutDiagram& d, RoadNetwork network, int q) : q_(q), network_(std::move(network)) {
  if (q < 1) throw Error("Chen map level must be at least 1");
  if (!network_.covers(d)) throw Error("road network does not cover the diagram");
  const auto regions = d.regions();
  for (const auto& r : regions) images_[r] = MeridianWord::generator(r.component);

  for (int level = 1; level < q; ++level) {
    std::map<RegionRef, MeridianWord> next;
    for (const auto& r : regions) {
      const RegionWord& road = network_.road(r);
      if (road.empty()) {
        next[r] = MeridianWord::generator(r.component);
        continue;
      }
      const MeridianWord conj = road.substitute([&](const RegionRef& g) -> const MeridianWord& {
        return images_.at(g);
      });
      next[r] = conj.inverse() * MeridianWord::generator(r.component) * conj;
    }
    images_ = std::move(next);
  }
}

const MeridianWord& ChenMap::image(const RegionRef& region) const {
  auto it = images_.find(region);
  if (it == images_.end()) throw Error("region " + to_string(region) + " is not covered by the road network");
  return it->second;
}

MeridianWord ChenMap::operator()(const RegionWord& w) const {
  MeridianWord out;
  for (const auto& l : w) out *= image(l.gen).pow(l.exp);
  return out;
}

MeridianWord chen_map(const CutDiagram& d, const RoadNetwork& network, int q, const RegionWord& w) {
  return ChenMap(d, network, q)(w);
}

std::vector<MeridianWord> NilPresentation::relators() const {
  std::vector<MeridianWord> out;
  for (const auto& [i, lambda] : commutation_relations)
    out.push_back(commutator(MeridianWord::generator(i), lambda));
  return out;
}

NilPresentation nilpotent_presentation(const CutDiagram& d, int q) {
  require_valid(d);
  NilPresentation p;
  p.q = q;
  p.num_meridians = d.num_components();
  const ChenMap eta(d, canonical_network(d), q);
  for (int i = 1; i <= d.num_components(); ++i)
    if (d.is_circle(i)) p.commutation_relations.emplace_back(i, eta(longitude(d, i)));
  return p;
}

MeridianWord rewrite_network(const CutDiagram& d, const RoadNetwork& from, const RoadNetwork& to, int q,
                             const MeridianWord& w) {
  const ChenMap eta_to(d, to, q);
  std::map<int, MeridianWord> replacement;
  for (int i = 1; i <= d.num_components(); ++i) {
    const RegionWord& nu = to.road({i, from.basepoint_region(i)});
    const MeridianWord g = eta_to(nu);
    replacement[i] = g.inverse() * MeridianWord::generator(i) * g;
  }
  return w.substitute([&](int i) -> const MeridianWord& {
    auto it = replacement.find(i);
    if (it == replacement.end()) throw Error("meridian R" + std::to_string(i) + " is not covered");
    return it->second;
  });
}

}  // namespace cutdiag
