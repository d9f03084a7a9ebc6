#include "cutdiag/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace cutdiag {

namespace {

template <class Gen, class F>
std::string word_to_string(const Word<Gen>& w, F&& name) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w) {
    if (!first) os << ' ';
    first = false;
    os << name(l.gen);
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

}  // namespace

std::string to_string(const RegionWord& w) {
  return word_to_string(w, [](const RegionRef& r) { return "r" + to_string(r); });
}

std::string to_string(const MeridianWord& w) {
  return word_to_string(w, [](int i) { return "R" + std::to_string(i); });
}

RegionWord cutpoint_relation(const CutDiagram& d, int component, int position) {
  const CutPoint& cp = d.cutpoint(component, position);
  const RegionRef a{component, d.incoming_region(component, position)};
  const RegionRef b{component, d.outgoing_region(component, position)};
  RegionWord rel;
  rel.push_back(b, -1);
  rel.push_back(cp.label, -cp.sign);
  rel.push_back(a, 1);
  rel.push_back(cp.label, cp.sign);
  return rel;
}

Presentation presentation(const CutDiagram& d) {
  require_valid(d);
  Presentation p;
  p.generators = d.regions();
  for (int i = 1; i <= d.num_components(); ++i)
    for (int pos = 0; pos < d.num_cutpoints(i); ++pos) p.relations.push_back(cutpoint_relation(d, i, pos));
  return p;
}

PathWords path_word(const CutDiagram& d, int component, int from, int to) {
  const int k = d.num_cutpoints(component);
  if (from < 0 || from > k || to < 0 || to > k)
    throw Error("path endpoints out of range on component " + std::to_string(component));
  std::vector<int> traversed;
  if (to >= from) {
    for (int p = from; p < to; ++p) traversed.push_back(p);
  } else {
    if (!d.is_circle(component))
      throw Error("path on interval component " + std::to_string(component) + " must follow the orientation");
    for (int p = from; p < k; ++p) traversed.push_back(p);
    for (int p = 0; p < to; ++p) traversed.push_back(p);
  }

  PathWords out;
  for (int p : traversed) {
    const CutPoint& cp = d.cutpoint(component, p);
    out.tilde.push_back(cp.label, cp.sign);
    if (cp.label.component == component) out.winding += cp.sign;
  }
  const RegionRef start{component, d.gap_region(component, from)};
  out.corrected = RegionWord::generator(start, -out.winding) * out.tilde;
  return out;
}

PathWords loop_path(const CutDiagram& d, int component, int start) {
  const int k = d.num_cutpoints(component);
  if (!d.is_circle(component)) {
    if (start != 0) throw Error("interval component " + std::to_string(component) + " is traversed from gap 0");
    return path_word(d, component, 0, k);
  }
  if (start < 0 || start > k) throw Error("loop start out of range on component " + std::to_string(component));
  if (start == 0 || start == k) return path_word(d, component, 0, k);
  // start..k-1 then 0..start-1, as two concatenated paths
  PathWords head = path_word(d, component, start, k);
  PathWords tail = path_word(d, component, 0, start);
  PathWords out;
  out.tilde = head.tilde * tail.tilde;
  out.winding = head.winding + tail.winding;
  const RegionRef base{component, d.gap_region(component, start)};
  out.corrected = RegionWord::generator(base, -out.winding) * out.tilde;
  return out;
}

RegionWord longitude(const CutDiagram& d, int component) {
  return path_word(d, component, 0, d.num_cutpoints(component)).corrected;
}

RegionRef meridian(const CutDiagram& d, int component) {
  d.kind(component);  // range check
  return {component, 0};
}

Abelianization abelianization(const Presentation& p) {
  std::map<RegionRef, int> column;
  for (const auto& g : p.generators) column.emplace(g, static_cast<int>(column.size()));
  const int cols = static_cast<int>(column.size());
  std::vector<std::vector<long long>> m;
  for (const auto& rel : p.relations) {
    std::vector<long long> row(cols, 0);
    for (const auto& l : rel) row[column.at(l.gen)] += l.exp;
    m.push_back(std::move(row));
  }

  // Smith normal form by elementary row and column operations.
  const int rows = static_cast<int>(m.size());
  std::vector<long long> diag;
  int t = 0;
  while (t < rows && t < cols) {
    int pr = -1, pc = -1;
    long long best = 0;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c)
        if (m[r][c] != 0 && (best == 0 || std::llabs(m[r][c]) < best)) {
          best = std::llabs(m[r][c]);
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < rows; ++r) {
        const long long q = m[r][t] / m[t][t];
        if (q != 0)
          for (int c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        const long long q = m[t][c] / m[t][t];
        if (q != 0)
          for (int r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) {
          for (auto& row : m) std::swap(row[t], row[c]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: the pivot must divide the rest of the block
        for (int r = t + 1; r < rows && clean; ++r)
          for (int c = t + 1; c < cols; ++c)
            if (m[r][c] % m[t][t] != 0) {
              for (int cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(std::llabs(m[t][t]));
    ++t;
  }

  Abelianization ab;
  ab.free_rank = cols - static_cast<int>(diag.size());
  for (long long v : diag)
    if (v > 1) ab.torsion.push_back(v);
  return ab;
}

}  // namespace cutdiag
