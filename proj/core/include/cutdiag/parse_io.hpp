#pragma once

// Text formats.
//
// .cut
//   diagram <name>
//   component <i> <circle|interval>
//   <+|-> <i>.<j>          one line per cut-point, in orientation order
//   end
// Lines starting with '#' are comments.
//
// .gauss
//   diagram <name>         optional
//   circle O1+ U2+         one line per component; tokens may be run together
//   interval U1- O3+ ...
//
// .cmov
//   from <name>
//   to <name>              optional claimed final diagram
//   mode <strict|reduced>
//   events
//   <event>                see format_event
//   end

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cutdiag/concordance.hpp"
#include "cutdiag/core.hpp"

namespace cutdiag {

class ParseError : public Error {
public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

CutDiagram parse_cut(std::string_view text);
std::string write_cut(const CutDiagram& d);

struct GaussToken {
  int crossing = 0;
  bool over = false;
  int sign = 1;

  bool operator==(const GaussToken&) const = default;
};

struct GaussComponent {
  ComponentKind kind = ComponentKind::circle;
  std::vector<GaussToken> tokens;
};

struct GaussCode {
  std::string name;
  std::vector<GaussComponent> components;
};

GaussCode read_gauss(std::string_view text);

/// One cut-point per under-passage, labeled by the region holding the
/// matching over-passage.
CutDiagram parse_gauss(const GaussCode& code);
CutDiagram parse_gauss_text(std::string_view text);

/// Maps a diagram name from a certificate header to the diagram.
using DiagramResolver = std::function<CutDiagram(const std::string& name)>;

Certificate parse_certificate(std::string_view text, const DiagramResolver& resolve);
std::string write_certificate(const Certificate& c);

}  // namespace cutdiag
