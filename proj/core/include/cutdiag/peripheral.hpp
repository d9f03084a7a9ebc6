#pragma once

// Nilpotent and reduced peripheral systems, and comparison of diagrams
// through their Milnor tables.

#include <optional>
#include <vector>

#include "cutdiag/chen.hpp"
#include "cutdiag/core.hpp"
#include "cutdiag/free_word.hpp"
#include "cutdiag/magnus.hpp"
#include "cutdiag/series.hpp"

namespace cutdiag {

enum class LongitudeComparison { exact, up_to_conjugation };

struct NilPeripheralSystem {
  int q = 1;
  NilPresentation presentation;
  std::vector<MeridianWord> meridians;   ///< R_i
  std::vector<MeridianWord> longitudes;  ///< eta_q(lambda_i)
  std::vector<LongitudeComparison> comparison;
};

NilPeripheralSystem peripheral_system(const CutDiagram& d, int q);

struct ReducedPeripheralData {
  int q = 1;
  std::vector<MeridianWord> meridians;
  /// eta_q(lambda_i) with every R_i letter deleted: a representative of the
  /// coset modulo the normal closure of R_i.
  std::vector<MeridianWord> longitude_cosets;
  /// Reduced expansions of the coset representatives.
  std::vector<TruncatedSeries> images;

  /// True when every coset is trivial in the reduced image.
  bool trivial() const;
};

ReducedPeripheralData reduced_peripheral(const CutDiagram& d, int q);

struct Verdict {
  bool distinguished = false;
  Sequence witness;  ///< first differing sequence in table order
  int maxlen = 0;
};

/// Compares Milnor tables (reduced ones when asked) up to length maxlen.
/// Throws Error when the skeletons differ.
Verdict same_invariants(const CutDiagram& a, const CutDiagram& b, int maxlen, bool reduced = false);

}  // namespace cutdiag
