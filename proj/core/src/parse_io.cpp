#include "cutdiag/parse_io.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace cutdiag {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    const std::string_view t = trim(line);
    if (!t.empty() && t.front() != '#') out.emplace_back(number, t);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

int expect_int(std::string_view s, int line, const char* what) {
  auto v = to_int(s);
  if (!v) throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(s) + "'");
  return *v;
}

RegionRef expect_region(std::string_view s, int line) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) throw ParseError(line, "expected region i.j, got '" + std::string(s) + "'");
  auto c = to_int(s.substr(0, dot));
  auto r = to_int(s.substr(dot + 1));
  if (!c || !r) throw ParseError(line, "expected region i.j, got '" + std::string(s) + "'");
  return {*c, *r};
}

int expect_sign(std::string_view s, int line) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  throw ParseError(line, "expected sign + or -, got '" + std::string(s) + "'");
}

ComponentKind expect_kind(std::string_view s, int line) {
  if (s == "circle") return ComponentKind::circle;
  if (s == "interval") return ComponentKind::interval;
  throw ParseError(line, "expected circle or interval, got '" + std::string(s) + "'");
}

Direction expect_direction(std::string_view s, int line) {
  if (s == "up") return Direction::up;
  if (s == "down") return Direction::down;
  throw ParseError(line, "expected up or down, got '" + std::string(s) + "'");
}

}  // namespace

CutDiagram parse_cut(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  std::string name;
  {
    const auto [ln, line] = lines.front();
    const auto words = split_ws(line);
    if (words.front() != "diagram" || words.size() > 2) throw ParseError(ln, "expected 'diagram <name>'");
    if (words.size() == 2) name = std::string(words[1]);
  }

  Skeleton skeleton;
  std::vector<std::vector<CutPoint>> cps;
  std::vector<std::vector<int>> cp_lines;
  bool open = false;
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const auto [ln, line] = lines[idx];
    const auto words = split_ws(line);
    if (words.front() == "component") {
      if (open) throw ParseError(ln, "component block not closed with 'end'");
      if (words.size() != 3) throw ParseError(ln, "expected 'component <i> <circle|interval>'");
      const int i = expect_int(words[1], ln, "component index");
      if (i != static_cast<int>(skeleton.size()) + 1)
        throw ParseError(ln, "components must be numbered 1, 2, ... in order");
      skeleton.components.push_back(expect_kind(words[2], ln));
      cps.emplace_back();
      cp_lines.emplace_back();
      open = true;
    } else if (words.front() == "end") {
      if (!open || words.size() != 1) throw ParseError(ln, "unexpected 'end'");
      open = false;
    } else if (open) {
      if (words.size() != 2) throw ParseError(ln, "expected '<+|-> <i>.<j>'");
      cps.back().push_back({expect_sign(words[0], ln), expect_region(words[1], ln)});
      cp_lines.back().push_back(ln);
    } else {
      throw ParseError(ln, "unexpected '" + std::string(line) + "'");
    }
  }
  if (open) throw ParseError(lines.back().first, "component block not closed with 'end'");

  CutDiagram d(skeleton, std::move(cps), name);
  const auto report = validate_diagram(d);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    const int ln = v.component >= 1 && v.position >= 0 ? cp_lines[v.component - 1][v.position] : 0;
    throw ParseError(ln, v.message);
  }
  return d;
}

std::string write_cut(const CutDiagram& d) {
  std::ostringstream os;
  os << "diagram";
  if (!d.name().empty()) os << ' ' << d.name();
  os << '\n';
  for (int i = 1; i <= d.num_components(); ++i) {
    os << "component " << i << ' ' << to_string(d.kind(i)) << '\n';
    for (const auto& cp : d.cutpoints(i)) os << (cp.sign > 0 ? '+' : '-') << ' ' << to_string(cp.label) << '\n';
    os << "end\n";
  }
  return os.str();
}

GaussCode read_gauss(std::string_view text) {
  GaussCode code;
  bool first = true;
  for (const auto& [ln, line] : content_lines(text)) {
    const auto words = split_ws(line);
    if (first && words.front() == "diagram") {
      if (words.size() == 2) code.name = std::string(words[1]);
      first = false;
      continue;
    }
    first = false;
    GaussComponent comp;
    comp.kind = expect_kind(words.front(), ln);
    std::string joined;
    for (std::size_t w = 1; w < words.size(); ++w) joined += words[w];
    std::size_t i = 0;
    while (i < joined.size()) {
      GaussToken t;
      if (joined[i] == 'O') t.over = true;
      else if (joined[i] == 'U') t.over = false;
      else throw ParseError(ln, std::string("expected O or U, got '") + joined[i] + "'");
      std::size_t j = ++i;
      while (j < joined.size() && joined[j] >= '0' && joined[j] <= '9') ++j;
      if (j == i) throw ParseError(ln, "missing crossing number");
      t.crossing = *to_int(std::string_view(joined).substr(i, j - i));
      if (j >= joined.size() || (joined[j] != '+' && joined[j] != '-'))
        throw ParseError(ln, "missing crossing sign");
      t.sign = joined[j] == '+' ? 1 : -1;
      comp.tokens.push_back(t);
      i = j + 1;
    }
    code.components.push_back(std::move(comp));
  }
  return code;
}

CutDiagram parse_gauss(const GaussCode& code) {
  struct Where {
    int component;
    int region;
    int sign;
  };
  std::map<int, Where> over, under_seen;
  Skeleton skeleton;
  std::vector<std::vector<int>> under_ids;
  for (int i = 1; i <= static_cast<int>(code.components.size()); ++i) {
    const auto& comp = code.components[i - 1];
    skeleton.components.push_back(comp.kind);
    int k = 0;
    for (const auto& t : comp.tokens)
      if (!t.over) ++k;
    int seen = 0;
    under_ids.emplace_back();
    for (const auto& t : comp.tokens) {
      auto& table = t.over ? over : under_seen;
      int region = seen;
      if (comp.kind == ComponentKind::circle && region == k) region = 0;
      if (!table.emplace(t.crossing, Where{i, region, t.sign}).second)
        throw ParseError(0, "crossing " + std::to_string(t.crossing) + " has two " + (t.over ? "over" : "under") +
                                "-passages");
      if (!t.over) {
        under_ids.back().push_back(t.crossing);
        ++seen;
      }
    }
  }
  for (const auto& [x, w] : over)
    if (!under_seen.count(x)) throw ParseError(0, "crossing " + std::to_string(x) + " has no under-passage");
  std::vector<std::vector<CutPoint>> cps;
  for (const auto& ids : under_ids) {
    std::vector<CutPoint> list;
    for (int x : ids) {
      auto it = over.find(x);
      if (it == over.end()) throw ParseError(0, "crossing " + std::to_string(x) + " has no over-passage");
      const Where& u = under_seen.at(x);
      if (u.sign != it->second.sign) throw ParseError(0, "crossing " + std::to_string(x) + " has mismatched signs");
      list.push_back({u.sign, {it->second.component, it->second.region}});
    }
    cps.push_back(std::move(list));
  }
  CutDiagram d(skeleton, std::move(cps), code.name);
  require_valid(d);
  return d;
}

CutDiagram parse_gauss_text(std::string_view text) { return parse_gauss(read_gauss(text)); }

Certificate parse_certificate(std::string_view text, const DiagramResolver& resolve) {
  const auto lines = content_lines(text);
  Certificate c;
  std::size_t idx = 0;
  auto next = [&](const char* expected) -> std::pair<int, std::vector<std::string_view>> {
    if (idx >= lines.size()) throw ParseError(lines.empty() ? 0 : lines.back().first, std::string("missing '") + expected + "'");
    const auto& [ln, line] = lines[idx++];
    return {ln, split_ws(line)};
  };

  auto [ln_from, from] = next("from");
  if (from.size() != 2 || from[0] != "from") throw ParseError(ln_from, "expected 'from <name>'");
  c.from_name = std::string(from[1]);

  auto [ln2, w2] = next("mode");
  if (w2.size() == 2 && w2[0] == "to") {
    c.to_name = std::string(w2[1]);
    std::tie(ln2, w2) = next("mode");
  }
  if (w2.size() != 2 || w2[0] != "mode") throw ParseError(ln2, "expected 'mode <strict|reduced>'");
  if (w2[1] == "strict") c.mode = CertificateMode::strict;
  else if (w2[1] == "reduced") c.mode = CertificateMode::reduced;
  else throw ParseError(ln2, "unknown mode '" + std::string(w2[1]) + "'");

  auto [ln3, w3] = next("events");
  if (w3.size() != 1 || w3[0] != "events") throw ParseError(ln3, "expected 'events'");

  bool closed = false;
  while (idx < lines.size()) {
    auto [ln, w] = next("end");
    if (w[0] == "end" && w.size() == 1) {
      closed = true;
      break;
    }
    Event e;
    auto args = [&](std::size_t n) {
      if (w.size() != n + 1) throw ParseError(ln, "wrong number of arguments for '" + std::string(w[0]) + "'");
    };
    auto cp = [&]() {
      e.component = expect_int(w[1], ln, "component");
      e.position = expect_int(w[2], ln, "position");
    };
    const std::string_view kind = w[0];
    if (kind == "product") {
      args(0);
      e.kind = EventKind::product;
    } else if (kind == "vdeath" || kind == "svdeath") {
      args(2);
      e.kind = kind == "vdeath" ? EventKind::vdeath : EventKind::svdeath;
      cp();
    } else if (kind == "vbirth" || kind == "svbirth") {
      args(4);
      e.kind = kind == "vbirth" ? EventKind::vbirth : EventKind::svbirth;
      cp();
      e.direction = expect_direction(w[3], ln);
      e.label = expect_region(w[4], ln);
    } else if (kind == "min") {
      args(4);
      e.kind = EventKind::min;
      cp();
      if (w[3] == "up,down") e.direction = Direction::up;
      else if (w[3] == "down,up") e.direction = Direction::down;
      else throw ParseError(ln, "expected up,down or down,up");
      e.label = expect_region(w[4], ln);
    } else if (kind == "max") {
      args(2);
      e.kind = EventKind::max;
      cp();
    } else if (kind == "pass") {
      args(4);
      e.kind = EventKind::pass;
      cp();
      if (w[3] == "over") e.over = true;
      else if (w[3] == "under") e.over = false;
      else throw ParseError(ln, "expected over or under");
      e.label = expect_region(w[4], ln);
    } else {
      throw ParseError(ln, "unknown event '" + std::string(kind) + "'");
    }
    if (c.mode == CertificateMode::strict && (e.kind == EventKind::svdeath || e.kind == EventKind::svbirth))
      throw ParseError(ln, "'" + std::string(kind) + "' is only allowed in reduced mode");
    c.events.push_back(e);
  }
  if (!closed) throw ParseError(lines.empty() ? 0 : lines.back().first, "missing 'end'");
  if (idx != lines.size()) throw ParseError(lines[idx].first, "trailing content after 'end'");

  try {
    c.initial = resolve(c.from_name);
    if (c.to_name) c.claimed_final = resolve(*c.to_name);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(0, err.what());
  }
  return c;
}

std::string write_certificate(const Certificate& c) {
  std::ostringstream os;
  os << "from " << c.from_name << '\n';
  if (c.to_name) os << "to " << *c.to_name << '\n';
  os << "mode " << to_string(c.mode) << '\n';
  os << "events\n";
  for (const auto& e : c.events) os << format_event(e) << '\n';
  os << "end\n";
  return os.str();
}

}  // namespace cutdiag
