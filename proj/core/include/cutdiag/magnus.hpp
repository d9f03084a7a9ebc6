#pragma once

// Magnus expansion R_i -> 1 + X_i, lower central series membership, and
// Milnor tables read off the Chen images of longitudes.

#include <map>
#include <optional>
#include <string>

#include "cutdiag/chen.hpp"
#include "cutdiag/core.hpp"
#include "cutdiag/free_word.hpp"
#include "cutdiag/series.hpp"

namespace cutdiag {

/// Expansion of w truncated below degree q. num_generators = 0 takes the
/// largest meridian index occurring in w.
TruncatedSeries expand(const MeridianWord& w, int q, int num_generators = 0);

/// Same, with every monomial repeating an index discarded.
TruncatedSeries reduced_expand(const MeridianWord& w, int q, int num_generators = 0);

/// True iff w lies in the q-th term of the lower central series of the free group.
bool in_lcs(const MeridianWord& w, int q);

/// Table order: shorter sequences first, then lexicographic.
struct SequenceLess {
  bool operator()(const Sequence& a, const Sequence& b) const;
};

struct MilnorEntry {
  Integer value;
  Integer modulus;  ///< 0 means exact

  bool operator==(const MilnorEntry&) const = default;
};

class MilnorTable {
public:
  using Map = std::map<Sequence, MilnorEntry, SequenceLess>;

  MilnorTable() = default;
  MilnorTable(int num_components, int maxlen, bool reduced) : n_(num_components), maxlen_(maxlen), reduced_(reduced) {}

  int num_components() const noexcept { return n_; }
  int maxlen() const noexcept { return maxlen_; }
  bool reduced() const noexcept { return reduced_; }

  const Map& entries() const noexcept { return entries_; }
  const MilnorEntry* find(const Sequence& s) const;
  const MilnorEntry& at(const Sequence& s) const;
  bool contains(const Sequence& s) const { return find(s) != nullptr; }
  void set(const Sequence& s, MilnorEntry e) { entries_[s] = std::move(e); }

  /// "I j : value [mod m]" lines for informative entries (value != 0 or m > 1).
  std::string to_text() const;

private:
  int n_ = 0;
  int maxlen_ = 0;
  bool reduced_ = false;
  Map entries_;
};

/// Series images of the Chen map at level q, computed directly in the
/// truncated series ring (equal to expand(chen_map(...)) by construction).
class ChenSeries {
public:
  ChenSeries(const CutDiagram& d, const RoadNetwork& network, int q, bool reduced = false);

  const TruncatedSeries& image(const RegionRef& region) const;
  TruncatedSeries operator()(const RegionWord& w) const;

private:
  int n_;
  int q_;
  bool reduced_;
  std::map<RegionRef, TruncatedSeries> images_;
  std::map<RegionRef, TruncatedSeries> inverses_;
};

/// Gcd of the table values mu(J), J a cyclic rotation of a proper
/// subsequence of s of length >= 2. Every such J must already be present.
Integer indeterminacy(const MilnorTable& table, const Sequence& s);

MilnorTable milnor_table(const CutDiagram& d, int maxlen);
MilnorTable milnor_table(const CutDiagram& d, const RoadNetwork& network, int maxlen);
MilnorTable reduced_milnor_table(const CutDiagram& d, int maxlen);

/// Builds a table from given longitude images (one per component), with the
/// moduli of the diagram's skeleton. Used for rewritten networks.
MilnorTable milnor_table_from_longitudes(const Skeleton& skeleton, const std::vector<TruncatedSeries>& longitudes,
                                         int maxlen, bool reduced);

/// First sequence (table order) whose values differ modulo the larger of the
/// two moduli, if any. Both tables must have the same keys.
std::optional<Sequence> first_difference(const MilnorTable& a, const MilnorTable& b);

}  // namespace cutdiag
