#include "dynamics.hpp"

#include <algorithm>

#include "error.hpp"

namespace nilsplit {

namespace {

bool sorted_contains(const std::vector<NormalForm>& set, const NormalForm& x) {
  return std::binary_search(set.begin(), set.end(), x);
}

std::vector<NormalForm> sorted_conjugates(const AmalgamSpec& spec,
                                          const std::vector<NormalForm>& set,
                                          const NormalForm& by) {
  std::vector<NormalForm> out;
  out.reserve(set.size());
  for (const NormalForm& f : set) out.push_back(nf_conjugate(spec, f, by));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NormalForm> intersect_sorted(const std::vector<NormalForm>& a,
                                         const std::vector<NormalForm>& b) {
  std::vector<NormalForm> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

int displacement(const AmalgamSpec& spec, const NormalForm& g, const Vertex& v) {
  return distance(spec, v, act(spec, g, v));
}

ElementAction classify_element(const AmalgamSpec& spec, const NormalForm& g) {
  Vertex v = base_vertex(1);
  int d = displacement(spec, g, v);
  // Displacement is min + 2 * (distance to the minimizing set), so the walk
  // reaches a minimizer in at most d / 2 steps.
  int guard = d / 2 + 2;
  for (int step = 0; step < guard; ++step) {
    if (d == 0) {
      ElementAction out;
      out.elliptic = true;
      out.fixed_vertex = v;
      return out;
    }
    bool found = false;
    Vertex best;
    int best_d = 0;
    for (const StarEntry& entry : vertex_star(spec, v)) {
      int du = displacement(spec, g, entry.neighbor);
      if (!found || du < best_d ||
          (du == best_d && vertex_less(entry.neighbor, best))) {
        found = true;
        best = entry.neighbor;
        best_d = du;
      }
    }
    if (!found) fail(errc::internal, "vertex with an empty star");
    if (best_d >= d) {
      // v minimizes the displacement, so g translates along an axis through v.
      ElementAction out;
      out.elliptic = false;
      out.translation_length = d;
      Axis axis;
      axis.translator = g;
      axis.period = geodesic_path(spec, v, act(spec, g, v));
      out.axis = std::move(axis);
      return out;
    }
    if (best_d != d - 2) fail(errc::internal, "displacement step is not -2");
    v = best;
    d = best_d;
  }
  fail(errc::internal, "displacement walk did not reach a minimizer");
}

Axis axis_of(const AmalgamSpec& spec, const NormalForm& g) {
  ElementAction action = classify_element(spec, g);
  if (action.elliptic)
    fail(errc::elliptic_element,
         "element fixes the vertex " + cell_to_string(action.fixed_vertex) +
             " and has no axis");
  return *std::move(action.axis);
}

namespace {

// Splits a signed offset as n = q * len + r with 0 <= r < len.
void split_offset(int n, int len, int& q, int& r) {
  q = n / len;
  r = n % len;
  if (r < 0) {
    r += len;
    q -= 1;
  }
}

}  // namespace

Vertex axis_vertex(const AmalgamSpec& spec, const Axis& axis, int n) {
  int q = 0, r = 0;
  split_offset(n, axis.length(), q, r);
  return act(spec, nf_power(spec, axis.translator, q), axis.period.vertices[r]);
}

Edge axis_edge(const AmalgamSpec& spec, const Axis& axis, int n) {
  int q = 0, r = 0;
  split_offset(n, axis.length(), q, r);
  return act(spec, nf_power(spec, axis.translator, q), axis.period.edges[r]);
}

std::vector<NormalForm> fix_of_axis(const AmalgamSpec& spec, const Axis& axis) {
  std::vector<NormalForm> fixer = path_stabilizer(spec, axis.period);
  NormalForm fwd = axis.translator;
  NormalForm back = nf_inverse(spec, axis.translator);
  // Fixing the period and its translates one step either way extends, by
  // induction, to the whole line: each pass doubles the window that the
  // candidate set is known to fix, and the chain is a nested sequence of
  // subgroups of a finite edge stabilizer, so it stabilizes quickly.
  int cap = spec.h.order + 2;
  for (int pass = 0; pass < cap; ++pass) {
    std::vector<NormalForm> next =
        intersect_sorted(fixer, sorted_conjugates(spec, fixer, fwd));
    next = intersect_sorted(next, sorted_conjugates(spec, fixer, back));
    if (next == fixer) return fixer;
    fixer = std::move(next);
  }
  fail(errc::internal, "axis fixer chain did not stabilize");
}

StabMembership stab_membership(const AmalgamSpec& spec, const Axis& axis,
                               const std::vector<NormalForm>& fixer,
                               const NormalForm& x) {
  NormalForm moved = nf_conjugate(spec, axis.translator, x);
  // x preserves the axis with orientation iff x g x^-1 differs from g by a
  // pointwise fixer, and reverses it iff x g x^-1 differs from g^-1 that way.
  if (sorted_contains(fixer,
                      nf_multiply(spec, moved, nf_inverse(spec, axis.translator))))
    return StabMembership::forward;
  if (sorted_contains(fixer, nf_multiply(spec, moved, axis.translator)))
    return StabMembership::reversed;
  return StabMembership::none;
}

bool stab_contains(const AmalgamSpec& spec, const Axis& axis,
                   const std::vector<NormalForm>& fixer, const NormalForm& x) {
  return stab_membership(spec, axis, fixer, x) != StabMembership::none;
}

GeodesicStab geodesic_stabilizer(const AmalgamSpec& spec, const Axis& axis) {
  GeodesicStab stab;
  stab.fixer = fix_of_axis(spec, axis);

  int len = axis.length();
  Edge e0 = axis.period.edges.front();

  // Shortest forward translation: anything shifting the axis by d maps edge 0
  // to edge d, so the transporters between those edges list every candidate.
  // d = len always succeeds (the translator itself shifts by len).
  for (int d = 1; d <= len && stab.t_min_length == 0; ++d) {
    Edge target = axis_edge(spec, axis, d);
    for (const NormalForm& cand : transporter(spec, e0, target)) {
      if (stab_membership(spec, axis, stab.fixer, cand) == StabMembership::forward) {
        stab.t_min = cand;
        stab.t_min_length = d;
        break;
      }
    }
  }
  if (stab.t_min_length == 0)
    fail(errc::internal, "no forward translation along the axis");
  if (len % stab.t_min_length != 0)
    fail(errc::internal, "minimal shift does not divide the translation length");

  // A reversing symmetry maps edge 0 to some edge d; composing with powers of
  // t_min shifts d by t_min_length, so scanning d = -1 .. len-1 covers every
  // residue (and more).  The first hit is the canonical reflection.
  for (int d = -1; d < len && !stab.reflection; ++d) {
    Edge target = axis_edge(spec, axis, d);
    for (const NormalForm& cand : transporter(spec, e0, target)) {
      if (stab_membership(spec, axis, stab.fixer, cand) == StabMembership::reversed) {
        stab.reflection = cand;
        break;
      }
    }
  }
  stab.sim_type = stab.reflection ? SimType::Dinfty : SimType::Z;

  // Structural checks: t_min normalizes the fixer; a reflection squares into
  // the fixer and inverts t_min modulo the fixer.
  for (const NormalForm& f : stab.fixer) {
    if (!sorted_contains(stab.fixer, nf_conjugate(spec, f, stab.t_min)))
      fail(errc::internal, "minimal shift does not normalize the axis fixer");
  }
  if (stab.reflection) {
    const NormalForm& r = *stab.reflection;
    if (!sorted_contains(stab.fixer, nf_multiply(spec, r, r)))
      fail(errc::internal, "reflection square is not in the axis fixer");
    NormalForm twisted = nf_conjugate(spec, stab.t_min, r);
    if (!sorted_contains(stab.fixer, nf_multiply(spec, twisted, stab.t_min)))
      fail(errc::internal, "reflection does not invert the minimal shift");
  }
  return stab;
}

}  // namespace nilsplit
