#pragma once

// Domain types for 1-dimensional cut-diagrams.
//
// A cut-diagram over an ordered, oriented 1-manifold X = X_1 u ... u X_n is a
// finite set of signed points on X, each labeled by a region (a connected
// component of X minus the points). Components are numbered from 1, regions
// of a component from 0.
//
// Region convention. Component i with cut-points p_1..p_k (orientation order,
// starting from the basepoint):
//   interval: regions r_0..r_k, r_0 before p_1 and r_j right after p_j;
//   circle:   regions r_0..r_{k-1}, r_0 holds the basepoint and precedes p_1,
//             r_j right after p_j for 1 <= j <= k-1 (the arc after p_k is r_0);
//             a circle without cut-points has the single region r_0.

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutdiag {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class ComponentKind { circle, interval };

std::string_view to_string(ComponentKind kind);

struct Skeleton {
  std::vector<ComponentKind> components;

  std::size_t size() const noexcept { return components.size(); }
  bool all_intervals() const noexcept;
  bool has_circle() const noexcept;
  bool operator==(const Skeleton&) const = default;
};

/// Region j of component i, printed "i.j".
struct RegionRef {
  int component = 1;
  int region = 0;

  auto operator<=>(const RegionRef&) const = default;
};

std::string to_string(const RegionRef& ref);

struct CutPoint {
  int sign = 1;
  RegionRef label;

  bool operator==(const CutPoint&) const = default;
};

class CutDiagram {
public:
  CutDiagram() = default;
  CutDiagram(Skeleton skeleton, std::vector<std::vector<CutPoint>> cutpoints,
             std::string name = {});

  const Skeleton& skeleton() const noexcept { return skeleton_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int num_components() const noexcept { return static_cast<int>(skeleton_.size()); }
  ComponentKind kind(int component) const;
  bool is_circle(int component) const { return kind(component) == ComponentKind::circle; }

  std::span<const CutPoint> cutpoints(int component) const;
  const CutPoint& cutpoint(int component, int position) const;
  int num_cutpoints(int component) const;
  int total_cutpoints() const noexcept;

  /// Region containing gap g (0 <= g <= k), the stretch before point g.
  int gap_region(int component, int gap) const;
  int incoming_region(int component, int position) const { return gap_region(component, position); }
  int outgoing_region(int component, int position) const { return gap_region(component, position + 1); }

  bool has_region(const RegionRef& ref) const noexcept;
  std::vector<RegionRef> regions() const;

  /// Equality ignores the name.
  bool operator==(const CutDiagram& other) const {
    return skeleton_ == other.skeleton_ && cutpoints_ == other.cutpoints_;
  }

private:
  void check_component(int component) const;

  Skeleton skeleton_;
  std::vector<std::vector<CutPoint>> cutpoints_;
  std::string name_;
};

struct Violation {
  int component = 0;
  int position = -1;  // -1 when the violation concerns the whole component
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_diagram(const CutDiagram& d);

/// Throws Error when the diagram is invalid, quoting the first violation.
void require_valid(const CutDiagram& d);

int region_count(const CutDiagram& d, int component);

/// Dense n x n matrix of integers, addressed with 1-based indices.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const noexcept { return n_; }
  long long& operator()(int row, int col) { return data_[index(row, col)]; }
  long long operator()(int row, int col) const { return data_[index(row, col)]; }
  bool operator==(const IntMatrix&) const = default;

private:
  std::size_t index(int row, int col) const;

  int n_ = 0;
  std::vector<long long> data_;
};

/// Entry (j, i), j != i: signed count of cut-points on component i labeled by
/// a region of component j. Diagonal: signed count of self-labeled cut-points.
IntMatrix linking_matrix(const CutDiagram& d);

}  // namespace cutdiag
