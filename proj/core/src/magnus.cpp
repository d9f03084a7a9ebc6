#include "cutdiag/magnus.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <boost/integer/common_factor.hpp>

#include "cutdiag/group.hpp"

namespace cutdiag {

namespace {

int infer_generators(const MeridianWord& w, int num_generators) {
  if (num_generators > 0) return num_generators;
  int n = 0;
  for (const auto& l : w) n = std::max(n, l.gen);
  return n;
}

TruncatedSeries expand_impl(const MeridianWord& w, int q, int num_generators, bool reduced) {
  const int n = infer_generators(w, num_generators);
  TruncatedSeries out(n, q, reduced);
  for (const auto& l : w) out *= TruncatedSeries::generator_power(n, q, l.gen, l.exp, reduced);
  return out;
}

TruncatedSeries power(const TruncatedSeries& s, const TruncatedSeries& s_inv, int exp) {
  TruncatedSeries out(s.num_generators(), s.max_degree(), s.reduced());
  const TruncatedSeries& base = exp < 0 ? s_inv : s;
  for (int t = 0; t < (exp < 0 ? -exp : exp); ++t) out *= base;
  return out;
}

bool repeats(const Sequence& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] == s[b]) return true;
  return false;
}

// Longitude from the network's basepoint on every component.
RegionWord network_longitude(const CutDiagram& d, const RoadNetwork& network, int j) {
  if (!d.is_circle(j)) return longitude(d, j);
  const int b = network.basepoint_region(j);
  return loop_path(d, j, b).corrected;
}

Integer reduce_mod(const Integer& v, const Integer& m) {
  if (m.is_zero()) return v;
  Integer r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

TruncatedSeries expand(const MeridianWord& w, int q, int num_generators) {
  return expand_impl(w, q, num_generators, false);
}

TruncatedSeries reduced_expand(const MeridianWord& w, int q, int num_generators) {
  return expand_impl(w, q, num_generators, true);
}

bool in_lcs(const MeridianWord& w, int q) { return expand(w, q).is_one(); }

bool SequenceLess::operator()(const Sequence& a, const Sequence& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

const MilnorEntry* MilnorTable::find(const Sequence& s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? nullptr : &it->second;
}

const MilnorEntry& MilnorTable::at(const Sequence& s) const {
  if (const auto* e = find(s)) return *e;
  throw Error("no Milnor entry for sequence " + to_string(s));
}

std::string MilnorTable::to_text() const {
  std::ostringstream os;
  for (const auto& [seq, e] : entries_) {
    if (e.value.is_zero() && e.modulus <= 1) continue;
    os << to_string(seq) << " : " << e.value;
    if (!e.modulus.is_zero()) os << " mod " << e.modulus;
    os << '\n';
  }
  return os.str();
}

ChenSeries::ChenSeries(const CutDiagram& d, const RoadNetwork& network, int q, bool reduced)
    : n_(d.num_components()), q_(q), reduced_(reduced) {
  if (q < 1) throw Error("Chen map level must be at least 1");
  if (!network.covers(d)) throw Error("road network does not cover the diagram");
  const auto regions = d.regions();
  for (const auto& r : regions) {
    images_[r] = TruncatedSeries::generator_power(n_, q_, r.component, 1, reduced_);
    inverses_[r] = TruncatedSeries::generator_power(n_, q_, r.component, -1, reduced_);
  }

  for (int level = 1; level < q; ++level) {
    std::map<RegionRef, TruncatedSeries> next, next_inv;
    const RegionWord* prev_road = nullptr;
    TruncatedSeries prev_series(n_, q_, reduced_);
    for (const auto& r : regions) {
      const RegionWord& road = network.road(r);
      if (road.empty()) {
        next[r] = TruncatedSeries::generator_power(n_, q_, r.component, 1, reduced_);
        next_inv[r] = TruncatedSeries::generator_power(n_, q_, r.component, -1, reduced_);
        prev_road = nullptr;
        continue;
      }
      // Roads of a component are usually nested prefixes; extend the last one.
      TruncatedSeries sv(n_, q_, reduced_);
      std::size_t start = 0;
      int carried = 0;
      if (prev_road != nullptr && !prev_road->empty() && prev_road->size() <= road.size()) {
        const std::size_t m = prev_road->size();
        bool prefix = true;
        for (std::size_t t = 0; t + 1 < m && prefix; ++t) prefix = (*prev_road)[t] == road[t];
        if (prefix && (*prev_road)[m - 1].gen == road[m - 1].gen) {
          sv = prev_series;
          start = m - 1;
          carried = (*prev_road)[m - 1].exp;
        }
      }
      for (std::size_t t = start; t < road.size(); ++t) {
        const auto& l = road[t];
        const int e = l.exp - (t == start ? carried : 0);
        sv *= power(images_.at(l.gen), inverses_.at(l.gen), e);
      }
      const TruncatedSeries sv_inv = sv.inverse();
      next[r] = sv_inv * TruncatedSeries::generator_power(n_, q_, r.component, 1, reduced_) * sv;
      next_inv[r] = sv_inv * TruncatedSeries::generator_power(n_, q_, r.component, -1, reduced_) * sv;
      prev_road = &road;
      prev_series = std::move(sv);
    }
    images_ = std::move(next);
    inverses_ = std::move(next_inv);
  }
}

const TruncatedSeries& ChenSeries::image(const RegionRef& region) const {
  auto it = images_.find(region);
  if (it == images_.end()) throw Error("region " + to_string(region) + " is not covered by the road network");
  return it->second;
}

TruncatedSeries ChenSeries::operator()(const RegionWord& w) const {
  TruncatedSeries out(n_, q_, reduced_);
  for (const auto& l : w) out *= power(image(l.gen), inverses_.at(l.gen), l.exp);
  return out;
}

Integer indeterminacy(const MilnorTable& table, const Sequence& s) {
  const int len = static_cast<int>(s.size());
  Integer g = 0;
  if (len > 20) throw Error("sequence too long for indeterminacy");
  for (unsigned mask = 1; mask + 1 < (1u << len); ++mask) {
    const int kept = std::popcount(mask);
    if (kept < 2) continue;
    Sequence sub;
    for (int p = 0; p < len; ++p)
      if (mask & (1u << p)) sub.push_back(s[p]);
    for (int rot = 0; rot < kept; ++rot) {
      Sequence j(sub.begin() + rot, sub.end());
      j.insert(j.end(), sub.begin(), sub.begin() + rot);
      const MilnorEntry* e = table.find(j);
      if (e == nullptr)
        throw Error("indeterminacy of " + to_string(s) + " needs " + to_string(j) + " first");
      g = boost::integer::gcd(g, e->value);
    }
  }
  return g < 0 ? Integer(-g) : g;
}

MilnorTable milnor_table_from_longitudes(const Skeleton& skeleton, const std::vector<TruncatedSeries>& longitudes,
                                         int maxlen, bool reduced) {
  const int n = static_cast<int>(skeleton.size());
  if (static_cast<int>(longitudes.size()) != n) throw Error("one longitude per component is required");
  if (maxlen < 2) throw Error("Milnor tables need maxlen >= 2");
  MilnorTable table(n, maxlen, reduced);
  if (n == 0) return table;

  for (int len = 2; len <= maxlen; ++len) {
    Sequence s(len, 1);
    while (true) {
      if (!reduced || !repeats(s)) {
        const int j = s.back();
        const TruncatedSeries& lam = longitudes[j - 1];
        if (lam.max_degree() < len) throw Error("longitude series truncated too early");
        MilnorEntry e;
        e.value = lam.coefficient(std::span<const int>(s.data(), s.size() - 1));
        // Conjugation ambiguity of circle meridians reaches interval longitudes too.
        e.modulus = skeleton.has_circle() ? indeterminacy(table, s) : Integer(0);
        e.value = reduce_mod(e.value, e.modulus);
        table.set(s, std::move(e));
      }
      int p = len - 1;
      while (p >= 0 && s[p] == n) s[p--] = 1;
      if (p < 0) break;
      ++s[p];
    }
  }
  return table;
}

MilnorTable milnor_table(const CutDiagram& d, const RoadNetwork& network, int maxlen) {
  require_valid(d);
  const ChenSeries eta(d, network, maxlen);
  std::vector<TruncatedSeries> lams;
  for (int j = 1; j <= d.num_components(); ++j) lams.push_back(eta(network_longitude(d, network, j)));
  return milnor_table_from_longitudes(d.skeleton(), lams, maxlen, false);
}

MilnorTable milnor_table(const CutDiagram& d, int maxlen) { return milnor_table(d, canonical_network(d), maxlen); }

MilnorTable reduced_milnor_table(const CutDiagram& d, int maxlen) {
  require_valid(d);
  const RoadNetwork net = canonical_network(d);
  const ChenSeries eta(d, net, maxlen, true);
  std::vector<TruncatedSeries> lams;
  for (int j = 1; j <= d.num_components(); ++j) lams.push_back(eta(longitude(d, j)));
  return milnor_table_from_longitudes(d.skeleton(), lams, maxlen, true);
}

std::optional<Sequence> first_difference(const MilnorTable& a, const MilnorTable& b) {
  for (const auto& [seq, ea] : a.entries()) {
    const MilnorEntry* eb = b.find(seq);
    if (eb == nullptr) return seq;
    const Integer m = std::max(ea.modulus, eb->modulus);
    const Integer diff = ea.value - eb->value;
    if (m.is_zero() ? !diff.is_zero() : !reduce_mod(diff, m).is_zero()) return seq;
  }
  for (const auto& [seq, eb] : b.entries())
    if (!a.contains(seq)) return seq;
  return std::nullopt;
}

}  // namespace cutdiag
