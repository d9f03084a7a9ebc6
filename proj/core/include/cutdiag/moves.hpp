#pragma once

// Topological moves R1, R2, R3 and the self-virtualization move SV on
// 1-dimensional cut-diagrams.
//
// Insertions are placed at a gap g (0..k, gap g precedes cut-point g) and
// split the region containing it. `mask` says where the labels that pointed at
// the split region end up: bit b refers to the b-th cut-point (component
// order, then position) labeled by that region before the move; a set bit
// sends it to the piece after the insertion. On a circle without cut-points
// nothing is split and the mask must be 0.
//
// Textual form: kind@component:position[:params]
//   R1+@c:g:sign:before|after[:mask]   R1-@c:p
//   R2+@c:g:sign:i.j[:mask]            R2-@c:p
//   R3@c:p:first|second:i.j
//   SV+@c:g:sign:i.j[:mask]            SV-@c:p
// Labels of inserted cut-points use the region numbering after the move.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cutdiag/core.hpp"

namespace cutdiag {

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3, SVPlus, SVMinus };

std::string_view to_string(MoveKind kind);
bool is_insertion(MoveKind kind);

enum class LabelSide { before, after };

/// For R3: whether the cut-point keeping its label (C) is the first or the
/// second of the swapped pair.
enum class R3Role { first, second };

struct MoveInstance {
  MoveKind kind = MoveKind::R1Plus;
  int component = 1;
  int position = 0;  ///< gap for insertions, cut-point otherwise
  int sign = 1;      ///< R1+/SV+: new sign; R2+: sign of the first new cut-point
  LabelSide side = LabelSide::before;
  RegionRef label{};  ///< R2+/SV+: label of the new cut-points; R3: new label of the moving one
  R3Role role = R3Role::first;
  std::uint32_t mask = 0;

  bool operator==(const MoveInstance&) const = default;
};

/// Deterministic order: component, position, kind, then parameters.
bool move_less(const MoveInstance& a, const MoveInstance& b);

std::string format_move(const MoveInstance& m);
MoveInstance parse_move(std::string_view text);

/// Which families a walk may draw from.
enum class MoveSet { topological, self_virtual, all };

bool in_move_set(MoveKind kind, MoveSet set);

/// Every applicable instance, sorted by move_less. Relabeling masks are
/// enumerated exhaustively when at most four labels point at the split
/// region, otherwise only "all before" and "all after" are listed.
std::vector<MoveInstance> enumerate_moves(const CutDiagram& d);

/// Throws Error when a side condition fails.
CutDiagram apply_move(const CutDiagram& d, const MoveInstance& m);

/// For an insertion m: the region of d that contains region `after` of
/// apply_move(d, m). Other kinds leave regions unchanged.
RegionRef region_before_move(const CutDiagram& d, const MoveInstance& m, const RegionRef& after);

struct Walk {
  CutDiagram result;
  std::vector<MoveInstance> moves;
};

/// Each step picks a move kind uniformly among the applicable ones, then an
/// instance of that kind uniformly.
Walk random_walk_trace(const CutDiagram& d, int steps, std::uint64_t seed, MoveSet set = MoveSet::topological);

CutDiagram random_walk(const CutDiagram& d, int steps, std::uint64_t seed, MoveSet set = MoveSet::topological);

}  // namespace cutdiag
