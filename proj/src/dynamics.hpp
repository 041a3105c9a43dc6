#pragma once

#include <optional>
#include <vector>

#include "amalgam.hpp"
#include "tree.hpp"

namespace nilsplit {

// Axis of a hyperbolic element: the period is the geodesic from a minimal
// vertex v to translator * v, so it spans one fundamental domain of the
// translation.  Edge n of the full axis is translator^q * period.edges[r]
// with n = q * length() + r.
struct Axis {
  NormalForm translator;
  TreePath period;

  int length() const { return static_cast<int>(period.edges.size()); }
};

struct ElementAction {
  bool elliptic = true;
  Vertex fixed_vertex;         // meaningful only when elliptic
  int translation_length = 0;  // 0 when elliptic
  std::optional<Axis> axis;    // engaged only when hyperbolic
};

int displacement(const AmalgamSpec& spec, const NormalForm& g, const Vertex& v);

// Walks downhill from the base vertex until the displacement stops dropping.
ElementAction classify_element(const AmalgamSpec& spec, const NormalForm& g);

// Axis of g; fails with errc::elliptic_element if g fixes a vertex.
Axis axis_of(const AmalgamSpec& spec, const NormalForm& g);

// Cells of the full axis line at signed offset n.
Vertex axis_vertex(const AmalgamSpec& spec, const Axis& axis, int n);
Edge axis_edge(const AmalgamSpec& spec, const Axis& axis, int n);

// Pointwise stabilizer of the whole axis line, sorted.  Starts from the fixer
// of one period and intersects with its images under the translator until the
// chain stabilizes.
std::vector<NormalForm> fix_of_axis(const AmalgamSpec& spec, const Axis& axis);

// How x relates to the axis: not a stabilizer, a translation (possibly by 0),
// or an orientation-reversing symmetry.
enum class StabMembership { none, forward, reversed };

StabMembership stab_membership(const AmalgamSpec& spec, const Axis& axis,
                               const std::vector<NormalForm>& fixer,
                               const NormalForm& x);
bool stab_contains(const AmalgamSpec& spec, const Axis& axis,
                   const std::vector<NormalForm>& fixer, const NormalForm& x);

enum class SimType { Z, Dinfty };

// Setwise stabilizer of an axis, presented by its parts: the pointwise fixer,
// a shortest forward translation t_min, and a reversing symmetry if one
// exists.  Every stabilizer element is f * t_min^k, optionally times the
// reflection.
struct GeodesicStab {
  std::vector<NormalForm> fixer;  // sorted
  NormalForm t_min;
  int t_min_length = 0;
  std::optional<NormalForm> reflection;
  SimType sim_type = SimType::Z;
};

GeodesicStab geodesic_stabilizer(const AmalgamSpec& spec, const Axis& axis);

}  // namespace nilsplit
