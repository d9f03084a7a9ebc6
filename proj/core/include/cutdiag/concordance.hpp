#pragma once

// Cut-concordance certificates as movies of time slices over X x [0,1].
//
// A slice is a sequence of transits on each component, each the crossing of
// the slice by an oriented cut-arc, separated by region instances. Region
// instances are union-find nodes; the final classes are the regions of the
// 2-dimensional diagram, and all labeling rules are checked against them once
// the whole movie has been replayed.
//
// A transit goes up when its cut-arc points towards t = 1. At both ends a
// cut-point of positive sign corresponds to an upward transit.

#include <optional>
#include <string>
#include <vector>

#include "cutdiag/core.hpp"
#include "cutdiag/moves.hpp"

namespace cutdiag {

enum class Direction { up, down };
enum class CertificateMode { strict, reduced };

std::string_view to_string(Direction d);
std::string_view to_string(CertificateMode m);

enum class EventKind { product, vdeath, vbirth, svdeath, svbirth, min, max, pass };

std::string_view to_string(EventKind k);

/// Region references in events use the numbering of the slice just before
/// the event, with the same conventions as a 1-dimensional diagram.
struct Event {
  EventKind kind = EventKind::product;
  int component = 1;
  int position = 0;                   ///< gap for births and min, transit otherwise
  Direction direction = Direction::up;  ///< births; min: direction of the first new transit
  RegionRef label{};                  ///< births, min, pass (new label of the under transit)
  bool over = true;                   ///< pass: the transit at `position` is the over one

  bool operator==(const Event&) const = default;
};

std::string format_event(const Event& e);

struct Certificate {
  std::string from_name;
  CutDiagram initial;
  std::optional<std::string> to_name;
  std::optional<CutDiagram> claimed_final;
  CertificateMode mode = CertificateMode::strict;
  std::vector<Event> events;
};

struct VerifyReport {
  bool accepted = false;
  std::string tag;       ///< empty when accepted: structure, rule1, rule2, rule2prime, arc, pullback, final
  int event_index = -1;  ///< offending event, -1 for boundary checks
  std::string message;
};

VerifyReport verify(const Certificate& c);

/// Initial diagram and final slice as a 1-dimensional diagram (the claimed
/// final when the certificate names one). Throws Error when the replay fails
/// or the final slice does not bound a 1-dimensional diagram.
std::pair<CutDiagram, CutDiagram> boundaries(const Certificate& c);

/// One vertex death per cut-point, towards the empty diagram.
Certificate build_slice(const CutDiagram& d);

/// Strict certificate tracing a sequence of R moves.
Certificate build_trace(const CutDiagram& d, const std::vector<MoveInstance>& moves);

/// Reduced certificate tracing a sequence of moves that may include SV moves.
Certificate build_sv_trace(const CutDiagram& d, const std::vector<MoveInstance>& moves);

}  // namespace cutdiag
