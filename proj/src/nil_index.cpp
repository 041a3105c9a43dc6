#include "nil_index.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace nilsplit {

namespace {

int nf_index(const std::vector<NormalForm>& sorted, const NormalForm& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || !(*it == x)) return -1;
  return static_cast<int>(it - sorted.begin());
}

// Multiplication table of a normal-form set, with elements renamed to their
// sorted positions.  The identity sorts first, as element 0.
FiniteGroup abstract_copy(const AmalgamSpec& spec, const std::vector<NormalForm>& elems,
                          const char* what) {
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int idx = nf_index(elems, nf_multiply(spec, elems[i], elems[j]));
      if (idx < 0)
        fail(errc::inconsistent_stabilizer,
             std::string(what) + " element set is not closed under multiplication");
      table[i][j] = idx;
    }
  }
  return group_from_table(table);
}

// The fixer extended by one coset: elems u elems * x, sorted.
std::vector<NormalForm> extend_by(const AmalgamSpec& spec,
                                  const std::vector<NormalForm>& elems,
                                  const NormalForm& x, const char* what) {
  std::vector<NormalForm> out = elems;
  for (const NormalForm& f : elems) out.push_back(nf_multiply(spec, f, x));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    fail(errc::inconsistent_stabilizer,
         std::string(what) + " coset meets the fixer");
  return out;
}

bool fixes_common_vertex(const AmalgamSpec& spec, const Axis& axis,
                         const std::vector<NormalForm>& elems) {
  for (int n = -axis.length(); n <= 2 * axis.length(); ++n) {
    Vertex v = axis_vertex(spec, axis, n);
    bool all = true;
    for (const NormalForm& x : elems) {
      if (!(act(spec, x, v) == v)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::vector<NormalForm> conjugated_sorted(const AmalgamSpec& spec,
                                          const std::vector<NormalForm>& set,
                                          const NormalForm& by) {
  std::vector<NormalForm> out;
  out.reserve(set.size());
  for (const NormalForm& f : set) out.push_back(nf_conjugate(spec, f, by));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Axis translate_axis(const AmalgamSpec& spec, const Axis& axis, const NormalForm& x) {
  Axis out;
  out.translator = nf_conjugate(spec, axis.translator, x);
  out.period.vertices.reserve(axis.period.vertices.size());
  for (const Vertex& v : axis.period.vertices) out.period.vertices.push_back(act(spec, x, v));
  out.period.edges.reserve(axis.period.edges.size());
  for (const Edge& e : axis.period.edges) out.period.edges.push_back(act(spec, x, e));
  return out;
}

std::vector<NormalForm> generate_normal_forms(const AmalgamSpec& spec, int max_syllables) {
  if (max_syllables < 0) fail(errc::invalid_argument, "negative syllable bound");
  std::vector<NormalForm> out;
  for (Elt t = 0; t < spec.h.order; ++t) out.push_back(NormalForm{{}, t});
  for (int len = 1; len <= max_syllables; ++len) {
    for (int start = 1; start <= 2; ++start) {
      std::vector<int> factors(len);
      std::vector<int> radix(len);
      for (int i = 0; i < len; ++i) {
        factors[i] = i % 2 == 0 ? start : 3 - start;
        radix[i] = static_cast<int>(spec.transversal(factors[i]).size()) - 1;
      }
      std::vector<int> digit(len, 0);
      while (true) {
        NormalForm nf;
        nf.syllables.resize(len);
        for (int i = 0; i < len; ++i) nf.syllables[i] = Syllable{factors[i], digit[i] + 1};
        for (Elt t = 0; t < spec.h.order; ++t) {
          nf.tail = t;
          out.push_back(nf);
        }
        int pos = len - 1;
        while (pos >= 0 && digit[pos] == radix[pos] - 1) digit[pos--] = 0;
        if (pos < 0) break;
        ++digit[pos];
      }
    }
  }
  return out;
}

std::optional<NormalForm> axis_conjugator(const AmalgamSpec& spec, const Axis& from,
                                          const Axis& to,
                                          const std::vector<NormalForm>& to_fixer) {
  const Edge& e0 = from.period.edges.front();
  for (int r = 0; r < to.length(); ++r) {
    for (const NormalForm& cand : transporter(spec, e0, to.period.edges[r])) {
      // cand maps `from` onto `to` iff the conjugated translator still moves
      // along `to`; its axis is exactly cand * from.
      NormalForm moved = nf_conjugate(spec, from.translator, cand);
      if (stab_membership(spec, to, to_fixer, moved) != StabMembership::none)
        return cand;
    }
  }
  return std::nullopt;
}

std::optional<NormalForm> axes_conjugate(const AmalgamSpec& spec, const Axis& from,
                                         const Axis& to,
                                         const std::vector<NormalForm>& to_fixer) {
  if (from.length() != to.length()) return std::nullopt;
  return axis_conjugator(spec, from, to, to_fixer);
}

VCClass classify_vc(const AmalgamSpec& spec, const Axis& axis, const GeodesicStab& stab) {
  VCClass out;
  out.min_word = axis.translator;
  out.axis = axis;
  out.stab = stab;
  out.dinfty = stab.sim_type == SimType::Dinfty;

  out.fixer_group = abstract_copy(spec, stab.fixer, "fixer");
  out.fixer_fp = iso_fingerprint(out.fixer_group);

  out.alpha.resize(stab.fixer.size());
  for (size_t i = 0; i < stab.fixer.size(); ++i) {
    int idx = nf_index(stab.fixer, nf_conjugate(spec, stab.fixer[i], stab.t_min));
    if (idx < 0)
      fail(errc::inconsistent_stabilizer, "t_min does not permute the fixer");
    out.alpha[i] = static_cast<Elt>(idx);
  }
  try {
    check_automorphism(out.fixer_group, out.alpha);
  } catch (const Error& e) {
    fail(errc::inconsistent_stabilizer,
         std::string("conjugation by t_min is not an automorphism: ") + e.what());
  }

  if (out.dinfty) {
    const NormalForm& r = *stab.reflection;
    out.a_set = extend_by(spec, stab.fixer, r, "reflection");
    out.b_set = extend_by(spec, stab.fixer, nf_multiply(spec, stab.t_min, r),
                          "shifted reflection");
    out.a_group = abstract_copy(spec, out.a_set, "A");
    out.b_group = abstract_copy(spec, out.b_set, "B");
    out.a_fp = iso_fingerprint(out.a_group);
    out.b_fp = iso_fingerprint(out.b_group);
    out.a_fixes_vertex = fixes_common_vertex(spec, axis, out.a_set);
    out.b_fixes_vertex = fixes_common_vertex(spec, axis, out.b_set);
  } else {
    out.a_fixes_vertex = true;
    out.b_fixes_vertex = true;
  }

  out.fixer_in_edge_stabilizers = true;
  std::vector<std::vector<NormalForm>> edge_stabs;
  for (const Edge& e : axis.period.edges) {
    std::vector<NormalForm> st = local_stabilizer(spec, e);
    std::sort(st.begin(), st.end());
    edge_stabs.push_back(std::move(st));
  }
  for (const NormalForm& f : stab.fixer) {
    bool inside = false;
    for (const std::vector<NormalForm>& st : edge_stabs) {
      if (nf_index(st, f) >= 0) {
        inside = true;
        break;
      }
    }
    if (!inside) out.fixer_in_edge_stabilizers = false;
  }
  return out;
}

std::vector<VCClass> enumerate_vc_classes(const AmalgamSpec& spec, int max_syllables) {
  if (max_syllables < 2)
    fail(errc::bound_too_small, "no element is hyperbolic below two syllables");

  struct Pending {
    NormalForm min_core;
    Axis axis;
    std::vector<NormalForm> fixer;
  };
  std::vector<Pending> pending;
  std::set<NormalForm> seen;

  for (const NormalForm& cand : generate_normal_forms(spec, max_syllables)) {
    NormalForm core = cyclic_reduce(spec, cand).core;
    size_t len = core.syllables.size();
    // Cyclically reduced words are hyperbolic exactly when two or more
    // syllables remain (alternation then forces an even count).
    if (len < 2) continue;
    if (len % 2 != 0) fail(errc::internal, "odd cyclically reduced core");
    if (!seen.insert(core).second) continue;
    Axis axis = axis_of(spec, core);
    bool matched = false;
    for (Pending& p : pending) {
      // No length gate here: a proper power rides the same line as its root,
      // so its class is the root's class, and the stabilizer of that line
      // must be listed exactly once.
      if (axis_conjugator(spec, axis, p.axis, p.fixer)) {
        if (core < p.min_core) p.min_core = core;
        matched = true;
        break;
      }
    }
    if (!matched) pending.push_back({core, axis, fix_of_axis(spec, axis)});
  }

  std::vector<VCClass> classes;
  classes.reserve(pending.size());
  for (const Pending& p : pending) {
    // Rebuild from the canonical translator so the output is independent of
    // the order in which class members were encountered.
    Axis axis = axis_of(spec, p.min_core);
    GeodesicStab stab = geodesic_stabilizer(spec, axis);
    classes.push_back(classify_vc(spec, axis, stab));
  }
  std::sort(classes.begin(), classes.end(),
            [](const VCClass& a, const VCClass& b) { return a.min_word < b.min_word; });
  for (size_t i = 0; i < classes.size(); ++i) {
    for (size_t j = i + 1; j < classes.size(); ++j) {
      if (axes_conjugate(spec, classes[i].axis, classes[j].axis, classes[j].stab.fixer))
        fail(errc::internal, "conjugate classes survived the dedupe");
    }
  }
  return classes;
}

namespace {

// A vertex fixed by everything that stabilizes both lines (which must be
// distinct).  Overlapping lines pin the overlap segment: its midpoint vertex,
// or the pointwise-fixed central edge's endpoint.  Disjoint lines pin the
// bridge foot: the last vertex on `a` of the geodesic towards `b`.
Vertex intersection_anchor(const AmalgamSpec& spec, const Axis& a, const Axis& b) {
  Vertex a0 = axis_vertex(spec, a, 0);
  Vertex b0 = axis_vertex(spec, b, 0);
  int d0 = distance(spec, a0, b0);
  // Distinct periodic lines overlap in fewer than len(a) + len(b) edges, and
  // the overlap touches the projection of b0, so this window sees all of it.
  int w = d0 + a.length() + b.length() + 2;
  for (int rounds = 0; rounds < 4; ++rounds, w *= 2) {
    std::set<Vertex, VertexLess> on_b;
    for (int m = -(w + d0); m <= w + d0; ++m) on_b.insert(axis_vertex(spec, b, m));
    int lo = 0, hi = -1;
    for (int n = -w; n <= w; ++n) {
      if (on_b.count(axis_vertex(spec, a, n)) == 0) continue;
      if (hi < lo) lo = n;
      hi = n;
    }
    if (hi < lo) {
      // Disjoint: walk from a towards b; the exit point is the bridge foot.
      std::set<Vertex, VertexLess> on_a;
      for (int n = -w; n <= w; ++n) on_a.insert(axis_vertex(spec, a, n));
      TreePath path = geodesic_path(spec, a0, b0);
      Vertex foot = a0;
      for (const Vertex& v : path.vertices) {
        if (on_a.count(v)) foot = v;
      }
      return foot;
    }
    if (lo == -w || hi == w) continue;  // window clipped the overlap; widen
    if ((hi - lo) % 2 == 0) return axis_vertex(spec, a, (lo + hi) / 2);
    // Odd overlap: the central edge is fixed pointwise (no inversions), so
    // either endpoint will do; take the side-1 one.
    return edge_endpoints(axis_edge(spec, a, (lo + hi - 1) / 2)).first;
  }
  fail(errc::internal, "axis overlap exceeded the search window");
}

}  // namespace

AdaptedReport check_adapted(const AmalgamSpec& spec, const std::vector<VCClass>& classes,
                            int max_syllables, int conj_bound) {
  if (classes.empty()) fail(errc::invalid_argument, "empty class list");
  if (max_syllables < 2) fail(errc::invalid_argument, "syllable bound below 2");
  if (conj_bound < 0) fail(errc::invalid_argument, "negative conjugator bound");

  AdaptedReport report;
  report.max_syllables = max_syllables;
  report.conj_bound = conj_bound;
  std::vector<NormalForm> conjugators = generate_normal_forms(spec, conj_bound);

  // (1) Across distinct reps, every bounded conjugate pair of stabilizers
  // meets in a finite set: both live inside the stabilizer of a common
  // anchored cell unless the axes coincide.
  {
    AdaptedAxiom ax{1, true, ""};
    size_t checked = 0;
    size_t largest = 0;
    for (size_t i = 0; i < classes.size() && ax.holds; ++i) {
      for (size_t j = i + 1; j < classes.size() && ax.holds; ++j) {
        for (const NormalForm& x : conjugators) {
          Axis moved = translate_axis(spec, classes[j].axis, x);
          if (stab_membership(spec, classes[i].axis, classes[i].stab.fixer,
                              moved.translator) != StabMembership::none) {
            ax.holds = false;
            ax.detail = "classes " + std::to_string(i) + " and " + std::to_string(j) +
                        " share an axis under x = " + nf_to_string(x) +
                        ", so the stabilizers meet in an infinite set";
            break;
          }
          std::vector<NormalForm> moved_fixer =
              conjugated_sorted(spec, classes[j].stab.fixer, x);
          Vertex anchor = intersection_anchor(spec, classes[i].axis, moved);
          size_t size = 0;
          for (const NormalForm& y : local_stabilizer(spec, anchor)) {
            if (stab_contains(spec, classes[i].axis, classes[i].stab.fixer, y) &&
                stab_contains(spec, moved, moved_fixer, y))
              ++size;
          }
          largest = std::max(largest, size);
          ++checked;
        }
      }
    }
    if (ax.holds)
      ax.detail = "all " + std::to_string(checked) +
                  " bounded intersections finite; largest order " + std::to_string(largest);
    report.axioms.push_back(std::move(ax));
  }

  // (2) Reps are pairwise non-conjugate.
  {
    AdaptedAxiom ax{2, true, ""};
    for (size_t i = 0; i < classes.size() && ax.holds; ++i) {
      for (size_t j = i + 1; j < classes.size(); ++j) {
        std::optional<NormalForm> witness = axes_conjugate(
            spec, classes[i].axis, classes[j].axis, classes[j].stab.fixer);
        if (witness) {
          ax.holds = false;
          ax.detail = "x = " + nf_to_string(*witness) + " maps the axis of class " +
                      std::to_string(i) + " onto the axis of class " + std::to_string(j);
          break;
        }
      }
    }
    if (ax.holds)
      ax.detail = std::to_string(classes.size()) + " classes pairwise non-conjugate";
    report.axioms.push_back(std::move(ax));
  }

  // (3) Self-normalization: every bounded element stabilizing a rep's axis is
  // one of the presented stabilizer elements f * t_min^k (* reflection).
  {
    AdaptedAxiom ax{3, true, ""};
    size_t members = 0;
    for (size_t i = 0; i < classes.size() && ax.holds; ++i) {
      const VCClass& vc = classes[i];
      // A stabilizing x of at most conj_bound syllables translates by at most
      // conj_bound, so this power range covers every possible hit.
      int k_max = conj_bound + vc.axis.length() + 2;
      std::set<NormalForm> presented;
      for (int k = -k_max; k <= k_max; ++k) {
        NormalForm tk = nf_power(spec, vc.stab.t_min, k);
        for (const NormalForm& f : vc.stab.fixer) {
          NormalForm ftk = nf_multiply(spec, f, tk);
          presented.insert(ftk);
          if (vc.stab.reflection)
            presented.insert(nf_multiply(spec, ftk, *vc.stab.reflection));
        }
      }
      for (const NormalForm& x : conjugators) {
        if (stab_membership(spec, vc.axis, vc.stab.fixer, x) == StabMembership::none)
          continue;
        ++members;
        if (presented.count(x) == 0) {
          ax.holds = false;
          ax.detail = "x = " + nf_to_string(x) + " stabilizes the axis of class " +
                      std::to_string(i) + " but is not a presented stabilizer element";
          break;
        }
      }
    }
    if (ax.holds)
      ax.detail = std::to_string(members) +
                  " bounded stabilizer memberships, all presented";
    report.axioms.push_back(std::move(ax));
  }

  // (4) Coverage: every bounded hyperbolic element's axis is conjugate to a
  // rep's axis (powers land on the same line, so no length gate here).
  {
    AdaptedAxiom ax{4, true, ""};
    size_t covered = 0;
    for (const NormalForm& cand : generate_normal_forms(spec, max_syllables)) {
      if (cyclic_reduce(spec, cand).core.syllables.size() < 2) continue;
      Axis axis = axis_of(spec, cand);
      bool hit = false;
      for (const VCClass& vc : classes) {
        if (axis_conjugator(spec, axis, vc.axis, vc.stab.fixer)) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        ax.holds = false;
        ax.detail = "no class covers the axis of " + nf_to_string(cand);
        break;
      }
      ++covered;
    }
    if (ax.holds)
      ax.detail = "all " + std::to_string(covered) +
                  " bounded hyperbolic elements covered";
    report.axioms.push_back(std::move(ax));
  }

  for (const AdaptedAxiom& ax : report.axioms) report.all_hold = report.all_hold && ax.holds;
  return report;
}

std::string ring_label(const Fingerprint& fp) {
  return fp.order == 1 ? "R" : "R[" + fp.name + "]";
}

std::string alpha_label(const std::vector<Elt>& alpha) {
  bool identity = true;
  for (size_t i = 0; i < alpha.size(); ++i) identity = identity && alpha[i] == static_cast<Elt>(i);
  if (identity) return "id";
  std::string s = "[";
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(alpha[i]);
  }
  return s + "]";
}

namespace {

std::string coeff_label(const Fingerprint& big, const Fingerprint& small) {
  return "R[" + big.name + " − " + small.name + "]";
}

}  // namespace

SplittingReport splitting_report(const AmalgamSpec& spec, int max_syllables) {
  SplittingReport report;
  Fingerprint f1 = iso_fingerprint(spec.g1);
  Fingerprint f2 = iso_fingerprint(spec.g2);
  Fingerprint fh = iso_fingerprint(spec.h);
  report.left_label = "Nil^W(" + ring_label(fh) + "; " + coeff_label(f1, fh) + ", " +
                      coeff_label(f2, fh) + ")";
  report.max_syllables = max_syllables;
  // Index-(2,2) trees are lines: one axis carries every hyperbolic element,
  // so the single class provably exhausts the index set.
  report.complete = spec.index1() == 2 && spec.index2() == 2;
  for (VCClass& vc : enumerate_vc_classes(spec, max_syllables)) {
    Summand s;
    if (vc.dinfty) {
      s.nil_label = "Nil^W(" + ring_label(vc.fixer_fp) + "; " +
                    coeff_label(vc.a_fp, vc.fixer_fp) + ", " +
                    coeff_label(vc.b_fp, vc.fixer_fp) + ")";
      s.v_prime_label = "NK(" + ring_label(vc.fixer_fp) + ", " + alpha_label(vc.alpha) + ")";
    } else {
      s.nil_label = "2 × NK(" + ring_label(vc.fixer_fp) + ", " + alpha_label(vc.alpha) + ")";
    }
    s.vc = std::move(vc);
    report.summands.push_back(std::move(s));
  }
  return report;
}

}  // namespace nilsplit
