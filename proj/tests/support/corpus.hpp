#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "cutdiag/core.hpp"
#include "cutdiag/parse_io.hpp"

#ifndef CUTDIAG_DATA_DIR
#define CUTDIAG_DATA_DIR "data"
#endif

namespace cutdiag::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& file) { return std::string(CUTDIAG_DATA_DIR) + "/" + file; }

inline CutDiagram load_cut(const std::string& name) { return parse_cut(read_file(data_path(name + ".cut"))); }

inline CutDiagram load_gauss(const std::string& name) {
  return parse_gauss_text(read_file(data_path(name + ".gauss")));
}

inline DiagramResolver data_resolver() {
  return [](const std::string& name) { return load_cut(name); };
}

/// Random valid diagram: 1..max_components components of random kinds and at
/// most max_points cut-points with uniformly random signs and labels.
inline CutDiagram random_diagram(std::mt19937_64& rng, int max_components = 3, int max_points = 8) {
  std::uniform_int_distribution<int> ncomp(1, max_components);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> npts(0, max_points);
  const int n = ncomp(rng);
  Skeleton sk;
  for (int i = 0; i < n; ++i) sk.components.push_back(coin(rng) ? ComponentKind::circle : ComponentKind::interval);
  std::vector<int> counts(n, 0);
  const int total = npts(rng);
  std::uniform_int_distribution<int> which(0, n - 1);
  for (int t = 0; t < total; ++t) ++counts[which(rng)];
  std::vector<RegionRef> regions;
  for (int i = 0; i < n; ++i) {
    const int rc = sk.components[i] == ComponentKind::circle ? std::max(counts[i], 1) : counts[i] + 1;
    for (int j = 0; j < rc; ++j) regions.push_back({i + 1, j});
  }
  std::uniform_int_distribution<std::size_t> pick(0, regions.size() - 1);
  std::vector<std::vector<CutPoint>> cps(n);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < counts[i]; ++p) cps[i].push_back({coin(rng) ? 1 : -1, regions[pick(rng)]});
  return CutDiagram(sk, std::move(cps), "random");
}

}  // namespace cutdiag::testing
