#include "cutdiag/peripheral.hpp"

#include "cutdiag/group.hpp"

namespace cutdiag {

NilPeripheralSystem peripheral_system(const CutDiagram& d, int q) {
  require_valid(d);
  NilPeripheralSystem p;
  p.q = q;
  p.presentation = nilpotent_presentation(d, q);
  const ChenMap eta(d, canonical_network(d), q);
  for (int i = 1; i <= d.num_components(); ++i) {
    p.meridians.push_back(MeridianWord::generator(i));
    p.longitudes.push_back(eta(longitude(d, i)));
    p.comparison.push_back(d.is_circle(i) ? LongitudeComparison::up_to_conjugation : LongitudeComparison::exact);
  }
  return p;
}

bool ReducedPeripheralData::trivial() const {
  for (const auto& s : images)
    if (!s.is_one()) return false;
  return true;
}

ReducedPeripheralData reduced_peripheral(const CutDiagram& d, int q) {
  require_valid(d);
  ReducedPeripheralData r;
  r.q = q;
  const ChenMap eta(d, canonical_network(d), q);
  const int n = d.num_components();
  for (int i = 1; i <= n; ++i) {
    r.meridians.push_back(MeridianWord::generator(i));
    MeridianWord coset = eta(longitude(d, i)).without(i);
    r.images.push_back(reduced_expand(coset, q, n));
    r.longitude_cosets.push_back(std::move(coset));
  }
  return r;
}

Verdict same_invariants(const CutDiagram& a, const CutDiagram& b, int maxlen, bool reduced) {
  if (!(a.skeleton() == b.skeleton())) throw Error("diagrams have different skeletons");
  const MilnorTable ta = reduced ? reduced_milnor_table(a, maxlen) : milnor_table(a, maxlen);
  const MilnorTable tb = reduced ? reduced_milnor_table(b, maxlen) : milnor_table(b, maxlen);
  Verdict v;
  v.maxlen = maxlen;
  if (auto w = first_difference(ta, tb)) {
    v.distinguished = true;
    v.witness = *w;
  }
  return v;
}

}  // namespace cutdiag
