#include "cutdiag/core.hpp"

#include <algorithm>
#include <sstream>

namespace cutdiag {

std::string_view to_string(ComponentKind kind) {
  return kind == ComponentKind::circle ? "circle" : "interval";
}

bool Skeleton::all_intervals() const noexcept {
  return std::all_of(components.begin(), components.end(),
                     [](ComponentKind k) { return k == ComponentKind::interval; });
}

bool Skeleton::has_circle() const noexcept { return !all_intervals(); }

std::string to_string(const RegionRef& ref) {
  return std::to_string(ref.component) + "." + std::to_string(ref.region);
}

CutDiagram::CutDiagram(Skeleton skeleton, std::vector<std::vector<CutPoint>> cutpoints,
                       std::string name)
    : skeleton_(std::move(skeleton)), cutpoints_(std::move(cutpoints)), name_(std::move(name)) {
  if (cutpoints_.size() != skeleton_.size())
    throw Error("cut-point lists (" + std::to_string(cutpoints_.size()) +
                ") do not match skeleton components (" + std::to_string(skeleton_.size()) + ")");
}

void CutDiagram::check_component(int component) const {
  if (component < 1 || component > num_components())
    throw Error("component " + std::to_string(component) + " out of range 1.." +
                std::to_string(num_components()));
}

ComponentKind CutDiagram::kind(int component) const {
  check_component(component);
  return skeleton_.components[component - 1];
}

std::span<const CutPoint> CutDiagram::cutpoints(int component) const {
  check_component(component);
  return cutpoints_[component - 1];
}

const CutPoint& CutDiagram::cutpoint(int component, int position) const {
  auto pts = cutpoints(component);
  if (position < 0 || position >= static_cast<int>(pts.size()))
    throw Error("cut-point position " + std::to_string(position) + " out of range on component " +
                std::to_string(component));
  return pts[position];
}

int CutDiagram::num_cutpoints(int component) const {
  return static_cast<int>(cutpoints(component).size());
}

int CutDiagram::total_cutpoints() const noexcept {
  int total = 0;
  for (const auto& c : cutpoints_) total += static_cast<int>(c.size());
  return total;
}

int CutDiagram::gap_region(int component, int gap) const {
  const int k = num_cutpoints(component);
  if (gap < 0 || gap > k)
    throw Error("gap " + std::to_string(gap) + " out of range on component " +
                std::to_string(component));
  if (is_circle(component) && gap == k) return 0;
  return gap;
}

bool CutDiagram::has_region(const RegionRef& ref) const noexcept {
  if (ref.component < 1 || ref.component > num_components()) return false;
  return ref.region >= 0 && ref.region < region_count(*this, ref.component);
}

std::vector<RegionRef> CutDiagram::regions() const {
  std::vector<RegionRef> out;
  for (int i = 1; i <= num_components(); ++i)
    for (int j = 0; j < region_count(*this, i); ++j) out.push_back({i, j});
  return out;
}

int region_count(const CutDiagram& d, int component) {
  const int k = d.num_cutpoints(component);
  if (d.is_circle(component)) return k == 0 ? 1 : k;
  return k + 1;
}

ValidationReport validate_diagram(const CutDiagram& d) {
  ValidationReport report;
  for (int i = 1; i <= d.num_components(); ++i) {
    auto pts = d.cutpoints(i);
    for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
      const CutPoint& cp = pts[p];
      if (cp.sign != 1 && cp.sign != -1)
        report.violations.push_back({i, p, "sign " + std::to_string(cp.sign) + " is not +1 or -1"});
      const RegionRef& l = cp.label;
      if (l.component < 1 || l.component > d.num_components()) {
        report.violations.push_back(
            {i, p, "label component " + std::to_string(l.component) + " out of range"});
      } else if (l.region < 0 || l.region >= region_count(d, l.component)) {
        report.violations.push_back({i, p, "region " + std::to_string(l.region) + " out of range"});
      }
    }
  }
  return report;
}

void require_valid(const CutDiagram& d) {
  auto report = validate_diagram(d);
  if (report.ok()) return;
  const auto& v = report.violations.front();
  std::ostringstream os;
  os << "invalid diagram: component " << v.component;
  if (v.position >= 0) os << " cut-point " << v.position;
  os << ": " << v.message;
  throw Error(os.str());
}

std::size_t IntMatrix::index(int row, int col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_) throw Error("matrix index out of range");
  return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
}

IntMatrix linking_matrix(const CutDiagram& d) {
  IntMatrix m(d.num_components());
  for (int i = 1; i <= d.num_components(); ++i)
    for (const auto& cp : d.cutpoints(i)) m(cp.label.component, i) += cp.sign;
  return m;
}

}  // namespace cutdiag
