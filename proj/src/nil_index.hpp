#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam.hpp"
#include "dynamics.hpp"
#include "groups.hpp"
#include "tree.hpp"

namespace nilsplit {

// One conjugacy class of maximal infinite virtually cyclic subgroups, carried
// by the axis of its least cyclically reduced translator.  The stabilizer is
// presented abstractly: the fixer's multiplication table, the conjugation
// action of t_min on it, and for the dihedral variant the two reflection-point
// groups A = C u C*r and B = C u C*(t_min*r).
struct VCClass {
  NormalForm min_word;
  Axis axis;
  GeodesicStab stab;
  bool dinfty = false;

  FiniteGroup fixer_group;
  Fingerprint fixer_fp;
  std::vector<Elt> alpha;  // conjugation by t_min, in fixer order

  std::vector<NormalForm> a_set, b_set;  // dihedral variant only
  FiniteGroup a_group, b_group;
  Fingerprint a_fp, b_fp;

  // Cell-stabilizer constraints: the fixer sits inside edge stabilizers along
  // the axis, and A, B each fix a vertex.  Vacuously true where inapplicable.
  bool fixer_in_edge_stabilizers = false;
  bool a_fixes_vertex = false;
  bool b_fixes_vertex = false;
};

// The image of an axis under x, with the conjugated translator.
Axis translate_axis(const AmalgamSpec& spec, const Axis& axis, const NormalForm& x);

// Every normal form with at most max_syllables syllables: shortest first,
// then start factor, then transversal positions (last fastest), then tail.
std::vector<NormalForm> generate_normal_forms(const AmalgamSpec& spec, int max_syllables);

// First x (in transporter order over one period of `to`) with x * from = to
// as lines, in either orientation; nullopt if the lines are not conjugate.
std::optional<NormalForm> axis_conjugator(const AmalgamSpec& spec, const Axis& from,
                                          const Axis& to,
                                          const std::vector<NormalForm>& to_fixer);

// Same, but gated on equal translation lengths, so conjugate proper powers
// with longer translators are reported as distinct.
std::optional<NormalForm> axes_conjugate(const AmalgamSpec& spec, const Axis& from,
                                         const Axis& to,
                                         const std::vector<NormalForm>& to_fixer);

VCClass classify_vc(const AmalgamSpec& spec, const Axis& axis, const GeodesicStab& stab);

// Hyperbolic conjugacy classes with translators of at most max_syllables
// syllables, deduped by axis conjugacy and ordered by min_word.
std::vector<VCClass> enumerate_vc_classes(const AmalgamSpec& spec, int max_syllables);

struct AdaptedAxiom {
  int axiom = 0;
  bool holds = true;
  std::string detail;
};

struct AdaptedReport {
  bool all_hold = true;
  int max_syllables = 0;
  int conj_bound = 0;
  std::vector<AdaptedAxiom> axioms;
};

// Bounded verification that the class stabilizers form an adapted family:
// (1) finite pairwise intersections across conjugates, (2) pairwise
// non-conjugate reps, (3) self-normalization within the presented elements,
// (4) every bounded hyperbolic element's axis is covered by some rep.
AdaptedReport check_adapted(const AmalgamSpec& spec, const std::vector<VCClass>& classes,
                            int max_syllables, int conj_bound);

struct Summand {
  VCClass vc;
  std::string nil_label;
  std::string v_prime_label;  // dihedral variant only
};

struct SplittingReport {
  std::string left_label;
  int max_syllables = 0;
  bool complete = false;
  std::vector<Summand> summands;
};

SplittingReport splitting_report(const AmalgamSpec& spec, int max_syllables);

// "R" for the trivial group, else "R[name]".
std::string ring_label(const Fingerprint& fp);

// "id" for the identity permutation, else "[2,0,1]"-style.
std::string alpha_label(const std::vector<Elt>& alpha);

}  // namespace nilsplit
