#include "cutdiag/concordance.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace cutdiag {

std::string_view to_string(Direction d) { return d == Direction::up ? "up" : "down"; }
std::string_view to_string(CertificateMode m) { return m == CertificateMode::strict ? "strict" : "reduced"; }

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::product: return "product";
    case EventKind::vdeath: return "vdeath";
    case EventKind::vbirth: return "vbirth";
    case EventKind::svdeath: return "svdeath";
    case EventKind::svbirth: return "svbirth";
    case EventKind::min: return "min";
    case EventKind::max: return "max";
    case EventKind::pass: return "pass";
  }
  return "?";
}

std::string format_event(const Event& e) {
  std::string s(to_string(e.kind));
  if (e.kind == EventKind::product) return s;
  s += " " + std::to_string(e.component) + " " + std::to_string(e.position);
  switch (e.kind) {
    case EventKind::vbirth:
    case EventKind::svbirth: s += " " + std::string(to_string(e.direction)) + " " + to_string(e.label); break;
    case EventKind::min:
      s += e.direction == Direction::up ? " up,down " : " down,up ";
      s += to_string(e.label);
      break;
    case EventKind::pass: s += std::string(e.over ? " over " : " under ") + to_string(e.label); break;
    default: break;
  }
  return s;
}

namespace {

Direction opposite(Direction d) { return d == Direction::up ? Direction::down : Direction::up; }
int sign_of(Direction d) { return d == Direction::up ? 1 : -1; }
Direction direction_of(int sign) { return sign > 0 ? Direction::up : Direction::down; }

struct Transit {
  Direction dir;
  int label;
};

struct SliceComponent {
  bool circle = false;
  std::vector<Transit> transits;
  std::vector<int> gaps;  // one node per gap; on a circle the first and last coincide

  int region_count() const {
    const int k = static_cast<int>(transits.size());
    return circle ? std::max(k, 1) : k + 1;
  }
};

struct Failure {
  int event;
  std::string tag;
  std::string message;
};

class Replay {
public:
  explicit Replay(const CutDiagram& d, CertificateMode mode) : mode_(mode) {
    for (int i = 1; i <= d.num_components(); ++i) {
      SliceComponent sc;
      sc.circle = d.is_circle(i);
      const int count = region_count(d, i);
      std::vector<int> node(count);
      for (int j = 0; j < count; ++j) node[j] = new_node(i);
      initial_nodes_.push_back(node);
      for (int g = 0; g <= d.num_cutpoints(i); ++g) sc.gaps.push_back(node[d.gap_region(i, g)]);
      slice_.push_back(std::move(sc));
    }
    for (int i = 1; i <= d.num_components(); ++i)
      for (const auto& cp : d.cutpoints(i))
        slice_[i - 1].transits.push_back({direction_of(cp.sign), initial_nodes_[cp.label.component - 1][cp.label.region]});
    record_witnesses();
  }

  // Applies one event; returns an error message on structural failure.
  std::optional<std::string> apply(const Event& e, int index) {
    if (e.kind == EventKind::product) return std::nullopt;
    if (e.component < 1 || e.component > static_cast<int>(slice_.size()))
      return "component " + std::to_string(e.component) + " out of range";
    SliceComponent& sc = slice_[e.component - 1];
    const int k = static_cast<int>(sc.transits.size());
    const bool sv = e.kind == EventKind::svdeath || e.kind == EventKind::svbirth;
    if (sv && mode_ == CertificateMode::strict)
      failures_.push_back({index, "rule2", "self-virtual vertex in a strict certificate"});

    switch (e.kind) {
      case EventKind::vdeath:
      case EventKind::svdeath: {
        if (e.position < 0 || e.position >= k) return "no transit at position " + std::to_string(e.position);
        const int label = sc.transits[e.position].label;
        const int merged = merge_gaps(sc, e.position, e.position + 1);
        sc.transits.erase(sc.transits.begin() + e.position);
        sc.gaps.erase(sc.gaps.begin() + e.position + 1);
        add_vertex(sv, index, label, merged, e.component);
        break;
      }
      case EventKind::vbirth:
      case EventKind::svbirth: {
        if (e.position < 0 || e.position > k) return "no gap at position " + std::to_string(e.position);
        auto label = resolve(e.label);
        if (!label) return "region " + to_string(e.label) + " does not exist in the slice";
        const int ambient = sc.gaps[e.position];
        sc.transits.insert(sc.transits.begin() + e.position, Transit{e.direction, *label});
        sc.gaps.insert(sc.gaps.begin() + e.position, ambient);
        add_vertex(sv, index, *label, ambient, e.component);
        break;
      }
      case EventKind::min: {
        if (e.position < 0 || e.position > k) return "no gap at position " + std::to_string(e.position);
        auto label = resolve(e.label);
        if (!label) return "region " + to_string(e.label) + " does not exist in the slice";
        const int ambient = sc.gaps[e.position];
        // the arc separates its inside from the ambient region
        const int inner = new_node(e.component);
        sc.transits.insert(sc.transits.begin() + e.position,
                           {Transit{e.direction, *label}, Transit{opposite(e.direction), *label}});
        sc.gaps.insert(sc.gaps.begin() + e.position + 1, {inner, ambient});
        break;
      }
      case EventKind::max: {
        if (e.position < 0 || e.position + 1 >= k) return "no transit pair at position " + std::to_string(e.position);
        const Transit a = sc.transits[e.position];
        const Transit b = sc.transits[e.position + 1];
        if (a.dir == b.dir) return "maximum joins transits of equal direction";
        arcs_.push_back({index, a.label, b.label});
        merge_gaps(sc, e.position, e.position + 2);
        sc.transits.erase(sc.transits.begin() + e.position, sc.transits.begin() + e.position + 2);
        sc.gaps.erase(sc.gaps.begin() + e.position + 1, sc.gaps.begin() + e.position + 3);
        break;
      }
      case EventKind::pass: {
        if (e.position < 0 || e.position + 1 >= k) return "no transit pair at position " + std::to_string(e.position);
        auto target = resolve(e.label);
        if (!target) return "region " + to_string(e.label) + " does not exist in the slice";
        const int over_at = e.over ? e.position : e.position + 1;
        const int under_at = e.over ? e.position + 1 : e.position;
        const Transit over = sc.transits[over_at];
        passes_.push_back({index, over.label, sign_of(over.dir), sc.transits[under_at].label, *target, e.over});
        sc.transits[under_at].label = *target;
        std::swap(sc.transits[e.position], sc.transits[e.position + 1]);
        sc.gaps[e.position + 1] = new_node(e.component);
        break;
      }
      case EventKind::product: break;
    }
    record_witnesses();
    return std::nullopt;
  }

  // First failing obligation, checked against the final classes.
  std::optional<Failure> check_obligations() {
    std::vector<Failure> all = failures_;
    for (const auto& v : vertices_) {
      if (v.relaxed) {
        if (node_comp_[v.label] != v.component)
          all.push_back({v.event, "rule2prime", "vertex labeled by a region of another component"});
      } else if (find(v.label) != find(v.region)) {
        all.push_back({v.event, "rule2", "vertex not labeled by the region containing it"});
      }
    }
    for (const auto& a : arcs_)
      if (find(a.first) != find(a.second)) all.push_back({a.event, "arc", "maximum joins differently labeled transits"});
    for (const auto& p : passes_)
      if (!witnessed(p)) all.push_back({p.event, "rule1", "no cut-arc witnesses the label change"});
    if (all.empty()) return std::nullopt;
    return *std::min_element(all.begin(), all.end(),
                             [](const Failure& a, const Failure& b) { return a.event < b.event; });
  }

  // Final slice as a 1-dimensional diagram, labels pulled back to the slice.
  std::optional<CutDiagram> pullback(const Skeleton& skeleton, std::string* why) {
    std::vector<std::vector<CutPoint>> cps;
    for (int i = 0; i < static_cast<int>(slice_.size()); ++i) {
      std::vector<CutPoint> list;
      for (const auto& t : slice_[i].transits) {
        auto r = region_of_class(t.label);
        if (!r) {
          if (why) *why = "a final label class contains no region of the final slice";
          return std::nullopt;
        }
        list.push_back({sign_of(t.dir), *r});
      }
      cps.push_back(std::move(list));
    }
    return CutDiagram(skeleton, std::move(cps));
  }

  // Claimed final diagram agrees with the final slice up to the label map.
  std::optional<std::string> matches(const CutDiagram& claimed) {
    if (claimed.num_components() != static_cast<int>(slice_.size())) return "component count differs";
    for (int i = 1; i <= claimed.num_components(); ++i) {
      const auto& sc = slice_[i - 1];
      if (claimed.is_circle(i) != sc.circle) return "skeleton differs";
      if (claimed.num_cutpoints(i) != static_cast<int>(sc.transits.size()))
        return "cut-point count differs on component " + std::to_string(i);
      for (int p = 0; p < claimed.num_cutpoints(i); ++p) {
        const CutPoint& cp = claimed.cutpoint(i, p);
        const Transit& t = sc.transits[p];
        if (cp.sign != sign_of(t.dir))
          return "orientation differs at cut-point " + std::to_string(p) + " of component " + std::to_string(i);
        auto node = resolve(cp.label);
        if (!node || find(*node) != find(t.label))
          return "label differs at cut-point " + std::to_string(p) + " of component " + std::to_string(i);
      }
    }
    return std::nullopt;
  }

private:
  struct Vertex {
    int event;
    int label;
    int region;
    int component;
    bool relaxed;
  };
  struct Arc {
    int event;
    int first;
    int second;
  };
  struct Pass {
    int event;
    int over_label;
    int over_sign;
    int from;
    int to;
    bool over_first;
  };
  using Witness = std::tuple<int, int, int, int>;  // sign, label, left, right

  int new_node(int component) {
    parent_.push_back(static_cast<int>(parent_.size()));
    node_comp_.push_back(component);
    return parent_.back();
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void uf_unite(int a, int b) { parent_[find(a)] = find(b); }

  // Unites the region instances at two gaps; the first node survives in the slice.
  int merge_gaps(SliceComponent& sc, int g1, int g2) {
    const int keep = sc.gaps[g1], drop = sc.gaps[g2];
    uf_unite(drop, keep);
    for (auto& g : sc.gaps)
      if (g == drop) g = keep;
    return keep;
  }

  void add_vertex(bool relaxed, int event, int label, int region, int component) {
    vertices_.push_back({event, label, region, component, relaxed});
  }

  std::optional<int> resolve(const RegionRef& r) const {
    if (r.component < 1 || r.component > static_cast<int>(slice_.size())) return std::nullopt;
    const auto& sc = slice_[r.component - 1];
    if (r.region < 0 || r.region >= sc.region_count()) return std::nullopt;
    return sc.gaps[r.region];
  }

  void record_witnesses() {
    for (const auto& sc : slice_)
      for (std::size_t p = 0; p < sc.transits.size(); ++p)
        witnesses_.insert({sign_of(sc.transits[p].dir), sc.transits[p].label, sc.gaps[p], sc.gaps[p + 1]});
  }

  bool witnessed(const Pass& p) {
    // A witness with sign s, left L, right R asserts R = C^{-s} L C^{s}.
    // Over transit first needs from = C^{-e} to C^{e}; second needs to = C^{-e} from C^{e}.
    const int c = find(p.over_label);
    const int a = find(p.from), b = find(p.to);
    for (const auto& [s, label, left, right] : witnesses_) {
      if (find(label) != c) continue;
      const int l = find(left), r = find(right);
      const bool same = s == p.over_sign;
      if (p.over_first) {
        if (same ? (l == b && r == a) : (l == a && r == b)) return true;
      } else {
        if (same ? (l == a && r == b) : (l == b && r == a)) return true;
      }
    }
    return false;
  }

  std::optional<RegionRef> region_of_class(int node) {
    for (int i = 0; i < static_cast<int>(slice_.size()); ++i)
      for (int j = 0; j < slice_[i].region_count(); ++j)
        if (slice_[i].gaps[j] == node) return RegionRef{i + 1, j};
    const int c = find(node);
    for (int i = 0; i < static_cast<int>(slice_.size()); ++i)
      for (int j = 0; j < slice_[i].region_count(); ++j)
        if (find(slice_[i].gaps[j]) == c) return RegionRef{i + 1, j};
    return std::nullopt;
  }

  CertificateMode mode_;
  std::vector<int> parent_;
  std::vector<int> node_comp_;
  std::vector<std::vector<int>> initial_nodes_;
  std::vector<SliceComponent> slice_;
  std::vector<Failure> failures_;
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<Pass> passes_;
  std::set<Witness> witnesses_;
};

VerifyReport reject(std::string tag, int event, std::string message) {
  VerifyReport r;
  r.accepted = false;
  r.tag = std::move(tag);
  r.event_index = event;
  r.message = std::move(message);
  return r;
}

}  // namespace

VerifyReport verify(const Certificate& c) {
  const auto report = validate_diagram(c.initial);
  if (!report.ok()) return reject("structure", -1, "initial diagram is invalid: " + report.violations.front().message);
  Replay replay(c.initial, c.mode);
  for (int i = 0; i < static_cast<int>(c.events.size()); ++i)
    if (auto err = replay.apply(c.events[i], i)) return reject("structure", i, *err);
  if (auto f = replay.check_obligations()) return reject(f->tag, f->event, f->message);
  std::string why;
  if (!replay.pullback(c.initial.skeleton(), &why)) return reject("pullback", -1, why);
  if (c.claimed_final) {
    if (auto err = replay.matches(*c.claimed_final)) return reject("final", -1, *err);
  }
  VerifyReport ok;
  ok.accepted = true;
  return ok;
}

std::pair<CutDiagram, CutDiagram> boundaries(const Certificate& c) {
  require_valid(c.initial);
  Replay replay(c.initial, c.mode);
  for (int i = 0; i < static_cast<int>(c.events.size()); ++i)
    if (auto err = replay.apply(c.events[i], i)) throw Error("event " + std::to_string(i) + ": " + *err);
  std::string why;
  auto final = replay.pullback(c.initial.skeleton(), &why);
  if (!final) throw Error(why);
  if (c.claimed_final) return {c.initial, *c.claimed_final};
  final->set_name(c.to_name.value_or(c.initial.name().empty() ? std::string("final") : c.initial.name() + "-final"));
  return {c.initial, *final};
}

Certificate build_slice(const CutDiagram& d) {
  require_valid(d);
  Certificate c;
  c.from_name = d.name();
  c.initial = d;
  c.mode = CertificateMode::strict;
  for (int i = 1; i <= d.num_components(); ++i)
    for (int p = 0; p < d.num_cutpoints(i); ++p) {
      Event e;
      e.kind = EventKind::vdeath;
      e.component = i;
      e.position = 0;
      c.events.push_back(e);
    }
  return c;
}

namespace {

Certificate trace(const CutDiagram& d, const std::vector<MoveInstance>& moves, bool reduced) {
  require_valid(d);
  Certificate c;
  c.from_name = d.name();
  c.initial = d;
  c.mode = reduced ? CertificateMode::reduced : CertificateMode::strict;
  CutDiagram cur = d;
  for (const auto& m : moves) {
    const CutDiagram next = apply_move(cur, m);
    Event e;
    e.component = m.component;
    e.position = m.position;
    switch (m.kind) {
      case MoveKind::R1Plus:
        e.kind = EventKind::vbirth;
        e.direction = direction_of(m.sign);
        e.label = {m.component, cur.gap_region(m.component, m.position)};
        break;
      case MoveKind::R1Minus: e.kind = EventKind::vdeath; break;
      case MoveKind::R2Plus:
        e.kind = EventKind::min;
        e.direction = direction_of(m.sign);
        e.label = region_before_move(cur, m, m.label);
        break;
      case MoveKind::R2Minus: e.kind = EventKind::max; break;
      case MoveKind::R3:
        e.kind = EventKind::pass;
        e.over = m.role == R3Role::first;
        e.label = m.label;
        break;
      case MoveKind::SVPlus:
      case MoveKind::SVMinus:
        if (!reduced) throw Error("SV moves have no strict trace: " + format_move(m));
        e.kind = m.kind == MoveKind::SVPlus ? EventKind::svbirth : EventKind::svdeath;
        e.direction = direction_of(m.sign);
        if (m.kind == MoveKind::SVPlus) e.label = region_before_move(cur, m, m.label);
        break;
    }
    c.events.push_back(e);
    cur = next;
  }
  c.claimed_final = cur;
  return c;
}

}  // namespace

Certificate build_trace(const CutDiagram& d, const std::vector<MoveInstance>& moves) { return trace(d, moves, false); }

Certificate build_sv_trace(const CutDiagram& d, const std::vector<MoveInstance>& moves) {
  return trace(d, moves, true);
}

}  // namespace cutdiag
