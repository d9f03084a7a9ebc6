#include "cutdiag/moves.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <tuple>

namespace cutdiag {

namespace {

// Diagram with regions replaced by opaque tokens, so that cut-points can be
// inserted and removed before renumbering.
struct XPoint {
  int sign;
  int label;
};

struct XComponent {
  bool circle = false;
  std::vector<XPoint> points;
  std::vector<int> gaps;  // k+1 tokens; on a circle gaps.front() == gaps.back()
};

struct Explicit {
  std::vector<XComponent> comps;
  int next_token = 0;

  int fresh() { return next_token++; }
  XComponent& comp(int c) { return comps.at(c - 1); }

  void replace_token(int from, int to) {
    for (auto& xc : comps) {
      for (auto& g : xc.gaps)
        if (g == from) g = to;
      for (auto& p : xc.points)
        if (p.label == from) p.label = to;
    }
  }

  bool is_label(int token) const {
    for (const auto& xc : comps)
      for (const auto& p : xc.points)
        if (p.label == token) return true;
    return false;
  }

  int token_of(const RegionRef& r) const {
    if (r.component < 1 || r.component > static_cast<int>(comps.size()))
      throw Error("region " + to_string(r) + " does not exist");
    const auto& xc = comps[r.component - 1];
    const int k = static_cast<int>(xc.points.size());
    const int count = xc.circle ? std::max(k, 1) : k + 1;
    if (r.region < 0 || r.region >= count) throw Error("region " + to_string(r) + " does not exist");
    return xc.gaps[r.region];
  }
};

Explicit to_explicit(const CutDiagram& d) {
  Explicit e;
  std::map<RegionRef, int> token;
  for (const auto& r : d.regions()) token[r] = e.fresh();
  for (int i = 1; i <= d.num_components(); ++i) {
    XComponent xc;
    xc.circle = d.is_circle(i);
    const int k = d.num_cutpoints(i);
    for (int g = 0; g <= k; ++g) xc.gaps.push_back(token.at({i, d.gap_region(i, g)}));
    for (const auto& cp : d.cutpoints(i)) xc.points.push_back({cp.sign, token.at(cp.label)});
    e.comps.push_back(std::move(xc));
  }
  return e;
}

CutDiagram from_explicit(const Explicit& e, const CutDiagram& like) {
  std::map<int, RegionRef> ref;
  for (int i = 1; i <= static_cast<int>(e.comps.size()); ++i) {
    const auto& xc = e.comps[i - 1];
    const int k = static_cast<int>(xc.points.size());
    for (int g = 0; g <= k; ++g) {
      const RegionRef r{i, (xc.circle && g == k) ? 0 : g};
      auto [it, inserted] = ref.emplace(xc.gaps[g], r);
      if (!inserted && it->second != r) throw Error("internal: region token spans two regions");
    }
  }
  std::vector<std::vector<CutPoint>> cps;
  for (const auto& xc : e.comps) {
    std::vector<CutPoint> list;
    for (const auto& p : xc.points) {
      auto it = ref.find(p.label);
      if (it == ref.end()) throw Error("internal: label token without region");
      list.push_back({p.sign, it->second});
    }
    cps.push_back(std::move(list));
  }
  return CutDiagram(like.skeleton(), std::move(cps), like.name());
}

struct Pieces {
  std::vector<int> tokens;  // before, middles..., after
};

// Labels (component order, position order) pointing at `token`.
std::vector<std::pair<int, int>> labels_of(const Explicit& e, int token) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(e.comps.size()); ++i)
    for (int p = 0; p < static_cast<int>(e.comps[i].points.size()); ++p)
      if (e.comps[i].points[p].label == token) out.emplace_back(i, p);
  return out;
}

bool splits(const Explicit& e, int c) {
  const auto& xc = e.comps.at(c - 1);
  return !(xc.circle && xc.points.empty());
}

std::vector<std::uint32_t> masks_for(const Explicit& e, int c, int g) {
  if (!splits(e, c)) return {0};
  const int m = static_cast<int>(labels_of(e, e.comps.at(c - 1).gaps.at(g)).size());
  if (m == 0) return {0};
  if (m <= 4) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < (1u << m); ++x) out.push_back(x);
    return out;
  }
  return {0, (1u << m) - 1};
}

// Inserts `signs.size()` cut-points at gap g of component c (labels unset)
// and returns the tokens of the pieces of the split region.
Pieces insert_points(Explicit& e, int c, int g, const std::vector<int>& signs, std::uint32_t mask) {
  XComponent& xc = e.comp(c);
  const int k = static_cast<int>(xc.points.size());
  if (g < 0 || g > k) throw Error("gap " + std::to_string(g) + " out of range on component " + std::to_string(c));
  const int t = xc.gaps[g];
  const int m = static_cast<int>(signs.size());
  const bool split = splits(e, c);
  const auto labeled = labels_of(e, t);
  if (!split && mask != 0) throw Error("nothing is split on an empty circle; mask must be 0");
  if (labeled.size() < 32 && (mask >> labeled.size()) != 0) throw Error("relabeling mask out of range");

  Pieces pc;
  pc.tokens.resize(m + 1);
  pc.tokens[0] = split ? e.fresh() : t;
  for (int s = 1; s < m; ++s) pc.tokens[s] = e.fresh();
  pc.tokens[m] = split ? e.fresh() : t;

  if (split) {
    for (std::size_t b = 0; b < labeled.size(); ++b) {
      auto [ci, pi] = labeled[b];
      e.comps[ci].points[pi].label = ((mask >> b) & 1u) ? pc.tokens[m] : pc.tokens[0];
    }
  }

  std::vector<int> gaps(xc.gaps.begin(), xc.gaps.begin() + g);
  gaps.insert(gaps.end(), pc.tokens.begin(), pc.tokens.end());
  gaps.insert(gaps.end(), xc.gaps.begin() + g + 1, xc.gaps.end());
  if (split && xc.circle) {
    // the other end of the basepoint region stays attached through the basepoint
    if (g == 0) gaps.back() = pc.tokens[0];
    if (g == k) gaps.front() = pc.tokens[m];
  }
  xc.gaps = std::move(gaps);

  std::vector<XPoint> pts(xc.points.begin(), xc.points.begin() + g);
  for (int s : signs) pts.push_back({s, -1});
  pts.insert(pts.end(), xc.points.begin() + g, xc.points.end());
  xc.points = std::move(pts);
  return pc;
}

// Removes cut-points p..p+count-1 and merges the outer regions.
void remove_points(Explicit& e, int c, int p, int count) {
  XComponent& xc = e.comp(c);
  const int before = xc.gaps[p];
  const int after = xc.gaps[p + count];
  xc.points.erase(xc.points.begin() + p, xc.points.begin() + p + count);
  xc.gaps.erase(xc.gaps.begin() + p + 1, xc.gaps.begin() + p + count + 1);
  if (after != before) e.replace_token(after, before);
}

void check_point(const CutDiagram& d, int c, int p) {
  if (c < 1 || c > d.num_components()) throw Error("component " + std::to_string(c) + " out of range");
  if (p < 0 || p >= d.num_cutpoints(c))
    throw Error("cut-point " + std::to_string(p) + " out of range on component " + std::to_string(c));
}

void check_pair(const CutDiagram& d, int c, int p) {
  check_point(d, c, p);
  if (p + 1 >= d.num_cutpoints(c)) throw Error("no cut-point follows position " + std::to_string(p));
}

void check_sign(int s) {
  if (s != 1 && s != -1) throw Error("sign must be +1 or -1");
}

// Possible new labels B for the moving cut-point of an R3 at (c, p).
std::vector<int> r3_targets(const Explicit& e, int c, int p, R3Role role) {
  const XComponent& xc = e.comps.at(c - 1);
  const int xi = role == R3Role::first ? p : p + 1;
  const int yi = role == R3Role::first ? p + 1 : p;
  const int C = xc.points[xi].label;
  const int eps = xc.points[xi].sign;
  const int A = xc.points[yi].label;
  std::vector<int> out;
  for (int ci = 0; ci < static_cast<int>(e.comps.size()); ++ci) {
    const auto& zc = e.comps[ci];
    for (int zi = 0; zi < static_cast<int>(zc.points.size()); ++zi) {
      if (ci == c - 1 && (zi == xi || zi == yi)) continue;
      const auto& z = zc.points[zi];
      if (z.label != C) continue;
      const int in = zc.gaps[zi], outr = zc.gaps[zi + 1];
      // x first: A = C^{-e} B C^{e};  x second: B = C^{-e} A C^{e}
      const int forward = role == R3Role::first ? -1 : 1;
      if (z.sign == eps * forward) {
        if (in == A) out.push_back(outr);
      } else {
        if (outr == A) out.push_back(in);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool r3_shape_ok(const Explicit& e, int c, int p) {
  const XComponent& xc = e.comps.at(c - 1);
  if (p + 1 >= static_cast<int>(xc.points.size())) return false;
  return !e.is_label(xc.gaps[p + 1]);
}

bool r2_minus_ok(const Explicit& e, int c, int p) {
  const XComponent& xc = e.comps.at(c - 1);
  if (p + 1 >= static_cast<int>(xc.points.size())) return false;
  const auto& a = xc.points[p];
  const auto& b = xc.points[p + 1];
  return a.label == b.label && a.sign == -b.sign && !e.is_label(xc.gaps[p + 1]);
}

int region_count_after(const CutDiagram& d, int c, int added) {
  const int k = d.num_cutpoints(c) + added;
  return d.is_circle(c) ? std::max(k, 1) : k + 1;
}

RegionRef region_of_token(const Explicit& e, int token) {
  for (int i = 0; i < static_cast<int>(e.comps.size()); ++i) {
    const auto& xc = e.comps[i];
    for (int g = 0; g < static_cast<int>(xc.gaps.size()); ++g)
      if (xc.gaps[g] == token) return {i + 1, g};  // gap k of a circle repeats gap 0
  }
  throw Error("internal: token without region");
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

int parse_sign(std::string_view s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw Error("bad sign '" + std::string(s) + "'");
}

RegionRef parse_region(std::string_view s) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) throw Error("bad region reference '" + std::string(s) + "'");
  return {parse_int(s.substr(0, dot), "component"), parse_int(s.substr(dot + 1), "region")};
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R2Plus: return "R2+";
    case MoveKind::R2Minus: return "R2-";
    case MoveKind::R3: return "R3";
    case MoveKind::SVPlus: return "SV+";
    case MoveKind::SVMinus: return "SV-";
  }
  return "?";
}

bool is_insertion(MoveKind kind) {
  return kind == MoveKind::R1Plus || kind == MoveKind::R2Plus || kind == MoveKind::SVPlus;
}

bool in_move_set(MoveKind kind, MoveSet set) {
  const bool sv = kind == MoveKind::SVPlus || kind == MoveKind::SVMinus;
  switch (set) {
    case MoveSet::topological: return !sv;
    case MoveSet::self_virtual: return sv;
    case MoveSet::all: return true;
  }
  return false;
}

bool move_less(const MoveInstance& a, const MoveInstance& b) {
  auto key = [](const MoveInstance& m) {
    return std::tuple(m.component, m.position, static_cast<int>(m.kind), m.sign, static_cast<int>(m.side), m.label,
                      static_cast<int>(m.role), m.mask);
  };
  return key(a) < key(b);
}

std::string format_move(const MoveInstance& m) {
  std::string s(to_string(m.kind));
  s += "@" + std::to_string(m.component) + ":" + std::to_string(m.position);
  const std::string sign = m.sign > 0 ? "+" : "-";
  const std::string mask = m.mask ? ":" + std::to_string(m.mask) : "";
  switch (m.kind) {
    case MoveKind::R1Plus: s += ":" + sign + ":" + (m.side == LabelSide::before ? "before" : "after") + mask; break;
    case MoveKind::R2Plus:
    case MoveKind::SVPlus: s += ":" + sign + ":" + to_string(m.label) + mask; break;
    case MoveKind::R3: s += std::string(":") + (m.role == R3Role::first ? "first" : "second") + ":" + to_string(m.label); break;
    default: break;
  }
  return s;
}

MoveInstance parse_move(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw Error("move '" + std::string(text) + "' lacks '@'");
  const std::string_view kind = text.substr(0, at);
  std::vector<std::string_view> parts;
  std::string_view rest = text.substr(at + 1);
  while (true) {
    const auto colon = rest.find(':');
    parts.push_back(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest = rest.substr(colon + 1);
  }
  MoveInstance m;
  static const std::pair<std::string_view, MoveKind> kinds[] = {
      {"R1+", MoveKind::R1Plus}, {"R1-", MoveKind::R1Minus}, {"R2+", MoveKind::R2Plus}, {"R2-", MoveKind::R2Minus},
      {"R3", MoveKind::R3},      {"SV+", MoveKind::SVPlus},  {"SV-", MoveKind::SVMinus}};
  bool known = false;
  for (const auto& [name, k] : kinds)
    if (name == kind) {
      m.kind = k;
      known = true;
    }
  if (!known) throw Error("unknown move kind '" + std::string(kind) + "'");

  auto need = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) throw Error("wrong number of fields in move '" + std::string(text) + "'");
  };
  switch (m.kind) {
    case MoveKind::R1Minus:
    case MoveKind::R2Minus:
    case MoveKind::SVMinus: need(2, 2); break;
    case MoveKind::R1Plus:
    case MoveKind::R2Plus:
    case MoveKind::SVPlus: need(4, 5); break;
    case MoveKind::R3: need(4, 4); break;
  }
  m.component = parse_int(parts[0], "component");
  m.position = parse_int(parts[1], "position");
  if (m.kind == MoveKind::R1Plus) {
    m.sign = parse_sign(parts[2]);
    if (parts[3] == "before") m.side = LabelSide::before;
    else if (parts[3] == "after") m.side = LabelSide::after;
    else throw Error("bad side '" + std::string(parts[3]) + "'");
  } else if (m.kind == MoveKind::R2Plus || m.kind == MoveKind::SVPlus) {
    m.sign = parse_sign(parts[2]);
    m.label = parse_region(parts[3]);
  } else if (m.kind == MoveKind::R3) {
    if (parts[2] == "first") m.role = R3Role::first;
    else if (parts[2] == "second") m.role = R3Role::second;
    else throw Error("bad R3 role '" + std::string(parts[2]) + "'");
    m.label = parse_region(parts[3]);
  }
  if (is_insertion(m.kind) && parts.size() == 5)
    m.mask = static_cast<std::uint32_t>(parse_int(parts[4], "mask"));
  return m;
}

CutDiagram apply_move(const CutDiagram& d, const MoveInstance& m) {
  const int c = m.component;
  if (c < 1 || c > d.num_components()) throw Error("component " + std::to_string(c) + " out of range");
  Explicit e = to_explicit(d);
  switch (m.kind) {
    case MoveKind::R1Plus: {
      check_sign(m.sign);
      Pieces pc = insert_points(e, c, m.position, {m.sign}, m.mask);
      e.comp(c).points[m.position].label = m.side == LabelSide::before ? pc.tokens[0] : pc.tokens[1];
      break;
    }
    case MoveKind::R2Plus:
    case MoveKind::SVPlus: {
      check_sign(m.sign);
      const bool r2 = m.kind == MoveKind::R2Plus;
      if (!r2 && m.label.component != c) throw Error("SV label must lie on the same component");
      std::vector<int> signs = r2 ? std::vector<int>{m.sign, -m.sign} : std::vector<int>{m.sign};
      Pieces pc = insert_points(e, c, m.position, signs, m.mask);
      const int lab = e.token_of(m.label);
      if (r2 && lab == pc.tokens[1]) throw Error("R2 label must not be the middle region");
      for (int s = 0; s < static_cast<int>(signs.size()); ++s) e.comp(c).points[m.position + s].label = lab;
      break;
    }
    case MoveKind::R1Minus: {
      check_point(d, c, m.position);
      const auto& xc = e.comp(c);
      const int lab = xc.points[m.position].label;
      if (lab != xc.gaps[m.position] && lab != xc.gaps[m.position + 1])
        throw Error("R1 deletion needs a cut-point labeled by an adjacent region");
      remove_points(e, c, m.position, 1);
      break;
    }
    case MoveKind::SVMinus: {
      check_point(d, c, m.position);
      if (d.cutpoint(c, m.position).label.component != c)
        throw Error("SV deletion needs a cut-point labeled by its own component");
      remove_points(e, c, m.position, 1);
      break;
    }
    case MoveKind::R2Minus: {
      check_pair(d, c, m.position);
      if (!r2_minus_ok(e, c, m.position))
        throw Error("R2 deletion needs equal labels, opposite signs and an unlabeled middle region");
      remove_points(e, c, m.position, 2);
      break;
    }
    case MoveKind::R3: {
      check_pair(d, c, m.position);
      if (!r3_shape_ok(e, c, m.position)) throw Error("R3 needs an unlabeled middle region");
      const int target = e.token_of(m.label);
      const auto targets = r3_targets(e, c, m.position, m.role);
      if (std::find(targets.begin(), targets.end(), target) == targets.end())
        throw Error("R3 new label " + to_string(m.label) + " has no witness");
      auto& xc = e.comp(c);
      const int yi = m.role == R3Role::first ? m.position + 1 : m.position;
      xc.points[yi].label = target;
      std::swap(xc.points[m.position], xc.points[m.position + 1]);
      break;
    }
  }
  return from_explicit(e, d);
}

std::vector<MoveInstance> enumerate_moves(const CutDiagram& d) {
  require_valid(d);
  std::vector<MoveInstance> out;
  const Explicit e = to_explicit(d);
  for (int c = 1; c <= d.num_components(); ++c) {
    const int k = d.num_cutpoints(c);
    const bool split = splits(e, c);
    for (int g = 0; g <= k; ++g) {
      const auto masks = masks_for(e, c, g);
      for (int sign : {1, -1})
        for (std::uint32_t mask : masks) {
          MoveInstance m;
          m.component = c;
          m.position = g;
          m.sign = sign;
          m.mask = mask;
          m.kind = MoveKind::R1Plus;
          for (LabelSide side : {LabelSide::before, LabelSide::after}) {
            if (!split && side == LabelSide::after) continue;
            m.side = side;
            out.push_back(m);
          }
          m.side = LabelSide::before;
          m.kind = MoveKind::R2Plus;
          for (int i = 1; i <= d.num_components(); ++i) {
            const int count = region_count_after(d, i, i == c ? 2 : 0);
            for (int j = 0; j < count; ++j) {
              if (i == c && j == g + 1) continue;
              m.label = {i, j};
              out.push_back(m);
            }
          }
          m.kind = MoveKind::SVPlus;
          for (int j = 0; j < region_count_after(d, c, 1); ++j) {
            m.label = {c, j};
            out.push_back(m);
          }
        }
    }
    for (int p = 0; p < k; ++p) {
      MoveInstance m;
      m.component = c;
      m.position = p;
      const CutPoint& cp = d.cutpoint(c, p);
      if (cp.label == RegionRef{c, d.incoming_region(c, p)} || cp.label == RegionRef{c, d.outgoing_region(c, p)}) {
        m.kind = MoveKind::R1Minus;
        out.push_back(m);
      }
      if (cp.label.component == c) {
        m.kind = MoveKind::SVMinus;
        out.push_back(m);
      }
      if (r2_minus_ok(e, c, p)) {
        m.kind = MoveKind::R2Minus;
        out.push_back(m);
      }
      if (r3_shape_ok(e, c, p)) {
        m.kind = MoveKind::R3;
        for (R3Role role : {R3Role::first, R3Role::second}) {
          m.role = role;
          for (int t : r3_targets(e, c, p, role)) {
            m.label = region_of_token(e, t);
            out.push_back(m);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), move_less);
  return out;
}

RegionRef region_before_move(const CutDiagram& d, const MoveInstance& m, const RegionRef& after) {
  if (!is_insertion(m.kind) || after.component != m.component) return after;
  const int added = m.kind == MoveKind::R2Plus ? 2 : 1;
  const int g = m.position;
  const int gap = after.region <= g ? after.region : (after.region <= g + added ? g : after.region - added);
  return {m.component, d.gap_region(m.component, gap)};
}

Walk random_walk_trace(const CutDiagram& d, int steps, std::uint64_t seed, MoveSet set) {
  std::mt19937_64 rng(seed);
  Walk w{d, {}};
  for (int s = 0; s < steps; ++s) {
    std::map<MoveKind, std::vector<MoveInstance>> by_kind;
    for (auto& m : enumerate_moves(w.result))
      if (in_move_set(m.kind, set)) by_kind[m.kind].push_back(std::move(m));
    if (by_kind.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_kind(0, by_kind.size() - 1);
    auto it = std::next(by_kind.begin(), static_cast<std::ptrdiff_t>(pick_kind(rng)));
    std::uniform_int_distribution<std::size_t> pick(0, it->second.size() - 1);
    const MoveInstance& m = it->second[pick(rng)];
    w.result = apply_move(w.result, m);
    w.moves.push_back(m);
  }
  return w;
}

CutDiagram random_walk(const CutDiagram& d, int steps, std::uint64_t seed, MoveSet set) {
  return random_walk_trace(d, steps, seed, set).result;
}

}  // namespace cutdiag
