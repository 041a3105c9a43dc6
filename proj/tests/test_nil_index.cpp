#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nil_index.hpp"
#include "test_helpers.hpp"

using namespace nilsplit;
using namespace nilsplit::testing;

#define CHECK_ERRC(expr, expected)                       \
  do {                                                   \
    bool caught = false;                                 \
    try {                                                \
      (void)(expr);                                      \
    } catch (const Error& e) {                           \
      caught = true;                                     \
      CHECK(e.code() == (expected));                     \
    }                                                    \
    CHECK_MESSAGE(caught, "expected " #expr " to fail"); \
  } while (0)

namespace {

NormalForm word(const AmalgamSpec& spec, const std::string& text) {
  return reduce(spec, parse_word(text));
}

int syllable_count(const NormalForm& nf) { return static_cast<int>(nf.syllables.size()); }

}  // namespace

TEST_CASE("normal form generation is exhaustive, distinct, and ordered") {
  AmalgamSpec psl = sample_psl2z();
  AmalgamSpec sl = sample_sl2z();
  AmalgamSpec din = sample_dinfty();

  std::vector<NormalForm> psl_forms = generate_normal_forms(psl, 4);
  std::vector<NormalForm> sl_forms = generate_normal_forms(sl, 4);
  std::vector<NormalForm> din_forms = generate_normal_forms(din, 4);

  // 1 + 3 + 4 + 6 + 8 reps for indices (2,3) with trivial H, doubled by the
  // order-2 tail for the (4,6) pair, and 1 + 2 per length on the (2,2) line.
  CHECK(psl_forms.size() == 22);
  CHECK(sl_forms.size() == 44);
  CHECK(din_forms.size() == 9);

  CHECK(psl_forms.front() == nf_identity());
  CHECK(generate_normal_forms(psl, 0).size() == 1);
  CHECK(generate_normal_forms(sl, 0).size() == 2);
  CHECK(generate_normal_forms(sl, 1).size() == 2 + 3 * 2);

  for (const AmalgamSpec* spec : {&psl, &sl, &din}) {
    std::vector<NormalForm> forms = generate_normal_forms(*spec, 4);
    std::set<NormalForm> distinct(forms.begin(), forms.end());
    CHECK(distinct.size() == forms.size());
    int prev_len = 0;
    for (const NormalForm& nf : forms) {
      // Already reduced: rereading its rendering gives it back.
      CHECK(reduce(*spec, parse_word(nf_to_string(nf))) == nf);
      CHECK(syllable_count(nf) >= prev_len);
      prev_len = syllable_count(nf);
    }
  }

  // Repeat runs agree, so downstream reports are deterministic.
  CHECK(generate_normal_forms(sl, 3) == generate_normal_forms(sl, 3));
}

TEST_CASE("translating an axis conjugates its translator and shifts its line") {
  AmalgamSpec psl = sample_psl2z();
  NormalForm ab = word(psl, "g1:1 g2:1");
  Axis axis = axis_of(psl, ab);

  std::mt19937 rng(531);
  for (int trial = 0; trial < 25; ++trial) {
    NormalForm x = random_element(rng, psl, 4);
    Axis moved = translate_axis(psl, axis, x);
    CHECK(moved.translator == nf_conjugate(psl, ab, x));
    CHECK(moved.length() == axis.length());

    std::set<Vertex, VertexLess> on_moved;
    for (int n = -10; n <= 10; ++n) on_moved.insert(axis_vertex(psl, moved, n));
    for (int n = -3; n <= 3; ++n)
      CHECK(on_moved.count(act(psl, x, axis_vertex(psl, axis, n))) == 1);
  }
}

TEST_CASE("axis conjugators are found exactly when the lines are conjugate") {
  AmalgamSpec psl = sample_psl2z();
  NormalForm ab = word(psl, "g1:1 g2:1");
  NormalForm ba = word(psl, "g2:1 g1:1");
  NormalForm g = word(psl, "g1:1 g2:1 g1:1 g2:2");

  Axis ab_axis = axis_of(psl, ab);
  Axis ba_axis = axis_of(psl, ba);
  Axis g_axis = axis_of(psl, g);
  std::vector<NormalForm> ab_fixer = fix_of_axis(psl, ab_axis);
  std::vector<NormalForm> g_fixer = fix_of_axis(psl, g_axis);

  // ba = a(ab)a^-1, so the lines are carried onto each other.
  std::optional<NormalForm> x = axis_conjugator(psl, ba_axis, ab_axis, ab_fixer);
  REQUIRE(x.has_value());
  CHECK(maps_line_onto(psl, *x, ba_axis, ab_axis));
  CHECK(axes_conjugate(psl, ba_axis, ab_axis, ab_fixer).has_value());

  // Distinct classes: no conjugator in either direction.
  CHECK_FALSE(axis_conjugator(psl, g_axis, ab_axis, ab_fixer).has_value());
  CHECK_FALSE(axis_conjugator(psl, ab_axis, g_axis, g_fixer).has_value());
  CHECK_FALSE(axes_conjugate(psl, ab_axis, g_axis, g_fixer).has_value());

  // A proper power rides its root's line: the ungated search finds the match,
  // the gated one refuses on translation length.
  Axis square_axis = axis_of(psl, nf_power(psl, ab, 2));
  std::optional<NormalForm> y = axis_conjugator(psl, square_axis, ab_axis, ab_fixer);
  REQUIRE(y.has_value());
  CHECK(maps_line_onto(psl, *y, square_axis, ab_axis));
  CHECK_FALSE(axes_conjugate(psl, square_axis, ab_axis, ab_fixer).has_value());

  // Moving a line by any group element stays within its class.
  std::mt19937 rng(532);
  for (int trial = 0; trial < 20; ++trial) {
    NormalForm z = random_element(rng, psl, 4);
    Axis moved = translate_axis(psl, g_axis, z);
    std::optional<NormalForm> back = axis_conjugator(psl, moved, g_axis, g_fixer);
    REQUIRE(back.has_value());
    CHECK(maps_line_onto(psl, *back, moved, g_axis));
  }
}

TEST_CASE("class profiles carry the stabilizer presentation") {
  AmalgamSpec psl = sample_psl2z();

  NormalForm ab = word(psl, "g1:1 g2:1");
  Axis ab_axis = axis_of(psl, ab);
  VCClass z_class = classify_vc(psl, ab_axis, geodesic_stabilizer(psl, ab_axis));
  CHECK_FALSE(z_class.dinfty);
  CHECK(z_class.fixer_group.order == 1);
  CHECK(z_class.fixer_fp.name == "1");
  CHECK(z_class.alpha == std::vector<Elt>{0});
  CHECK(z_class.a_set.empty());
  CHECK(z_class.b_set.empty());
  CHECK(z_class.fixer_in_edge_stabilizers);
  CHECK(z_class.a_fixes_vertex);
  CHECK(z_class.b_fixes_vertex);

  NormalForm g = word(psl, "g1:1 g2:1 g1:1 g2:2");
  Axis g_axis = axis_of(psl, g);
  GeodesicStab g_stab = geodesic_stabilizer(psl, g_axis);
  VCClass d_class = classify_vc(psl, g_axis, g_stab);
  CHECK(d_class.dinfty);
  CHECK(d_class.fixer_fp.name == "1");
  REQUIRE(g_stab.reflection.has_value());

  std::set<NormalForm> a_expect{nf_identity(), *g_stab.reflection};
  std::set<NormalForm> b_expect{nf_identity(),
                                nf_multiply(psl, g_stab.t_min, *g_stab.reflection)};
  CHECK(std::set<NormalForm>(d_class.a_set.begin(), d_class.a_set.end()) == a_expect);
  CHECK(std::set<NormalForm>(d_class.b_set.begin(), d_class.b_set.end()) == b_expect);
  CHECK(d_class.a_fp.name == "Z/2");
  CHECK(d_class.b_fp.name == "Z/2");
  CHECK(d_class.a_group.order == 2);
  CHECK(d_class.b_group.order == 2);
  CHECK(d_class.fixer_in_edge_stabilizers);
  CHECK(d_class.a_fixes_vertex);
  CHECK(d_class.b_fixes_vertex);
}

TEST_CASE("enumeration finds the two classes of the (2,3) amalgam") {
  AmalgamSpec psl = sample_psl2z();
  std::vector<VCClass> classes = enumerate_vc_classes(psl, 4);
  REQUIRE(classes.size() == 2);

  CHECK(classes[0].min_word == word(psl, "g1:1 g2:1"));
  CHECK_FALSE(classes[0].dinfty);
  CHECK(classes[0].stab.t_min == word(psl, "g1:1 g2:1"));
  CHECK(classes[0].stab.t_min_length == 2);
  CHECK_FALSE(classes[0].stab.reflection.has_value());

  CHECK(classes[1].min_word == word(psl, "g1:1 g2:1 g1:1 g2:2"));
  CHECK(classes[1].dinfty);
  CHECK(classes[1].stab.t_min_length == 4);
  REQUIRE(classes[1].stab.reflection.has_value());
  CHECK(*classes[1].stab.reflection == word(psl, "g1:1"));
  // The reflection genuinely inverts the translator.
  CHECK(nf_conjugate(psl, classes[1].min_word, *classes[1].stab.reflection) ==
        nf_inverse(psl, classes[1].min_word));

  CHECK_ERRC(enumerate_vc_classes(psl, 1), errc::bound_too_small);
  CHECK_ERRC(enumerate_vc_classes(psl, 0), errc::bound_too_small);
}

TEST_CASE("the (2,2) line has a single class at any bound") {
  AmalgamSpec din = sample_dinfty();
  for (int bound : {2, 3, 4}) {
    std::vector<VCClass> classes = enumerate_vc_classes(din, bound);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].min_word == word(din, "g1:1 g2:1"));
    CHECK(classes[0].dinfty);
    CHECK(classes[0].fixer_fp.name == "1");
    CHECK(classes[0].a_fp.name == "Z/2");
    CHECK(classes[0].b_fp.name == "Z/2");
  }
}

TEST_CASE("the (4,6) amalgam keeps its central fixer on every class") {
  AmalgamSpec sl = sample_sl2z();
  std::vector<VCClass> classes = enumerate_vc_classes(sl, 4);
  REQUIRE(classes.size() == 2);

  for (const VCClass& vc : classes) {
    CHECK(vc.fixer_fp.name == "Z/2");
    CHECK(vc.alpha == std::vector<Elt>{0, 1});
    CHECK(vc.stab.fixer == std::vector<NormalForm>{nf_identity(), word(sl, "h:1")});
    CHECK(vc.fixer_in_edge_stabilizers);
    CHECK(vc.a_fixes_vertex);
    CHECK(vc.b_fixes_vertex);
  }

  CHECK(classes[0].min_word == word(sl, "g1:1 g2:1"));
  CHECK_FALSE(classes[0].dinfty);
  CHECK(classes[0].stab.t_min_length == 2);

  CHECK(classes[1].min_word == word(sl, "g1:1 g2:1 g1:1 g2:2"));
  CHECK(classes[1].dinfty);
  CHECK(classes[1].stab.t_min_length == 4);
  // The reflection squares into the central fixer, so both reflection-point
  // groups are cyclic of order 4.
  CHECK(classes[1].a_fp.name == "Z/4");
  CHECK(classes[1].b_fp.name == "Z/4");
}

TEST_CASE("enumeration invariants hold on every class") {
  for (const AmalgamSpec& spec : {sample_psl2z(), sample_sl2z(), sample_dinfty()}) {
    std::vector<VCClass> classes = enumerate_vc_classes(spec, 4);
    for (size_t i = 0; i < classes.size(); ++i) {
      const VCClass& vc = classes[i];
      CHECK(vc.axis.translator == vc.min_word);
      CHECK(vc.stab.t_min_length == syllable_count(vc.min_word));
      CHECK(cyclic_reduce(spec, vc.min_word).core == vc.min_word);
      CHECK(stab_membership(spec, vc.axis, vc.stab.fixer, vc.min_word) ==
            StabMembership::forward);
      CHECK(vc.fixer_group.order <= spec.h.order);
      CHECK(vc.dinfty == vc.stab.reflection.has_value());

      for (size_t j = i + 1; j < classes.size(); ++j)
        CHECK_FALSE(
            axes_conjugate(spec, vc.axis, classes[j].axis, classes[j].stab.fixer)
                .has_value());
    }
  }
}

TEST_CASE("class counts agree with a brute-force conjugacy oracle") {
  CHECK(enumerate_vc_classes(sample_psl2z(), 4).size() ==
        brute_class_count(sample_psl2z(), 4, 6));
  CHECK(enumerate_vc_classes(sample_sl2z(), 4).size() ==
        brute_class_count(sample_sl2z(), 4, 6));
  CHECK(enumerate_vc_classes(sample_dinfty(), 4).size() ==
        brute_class_count(sample_dinfty(), 4, 6));
}

TEST_CASE("the adapted-family axioms hold for the enumerated classes") {
  for (const AmalgamSpec& spec : {sample_psl2z(), sample_sl2z(), sample_dinfty()}) {
    std::vector<VCClass> classes = enumerate_vc_classes(spec, 4);
    AdaptedReport report = check_adapted(spec, classes, 4, 4);
    CHECK(report.all_hold);
    CHECK(report.max_syllables == 4);
    CHECK(report.conj_bound == 4);
    REQUIRE(report.axioms.size() == 4);
    for (size_t i = 0; i < report.axioms.size(); ++i) {
      CHECK(report.axioms[i].axiom == static_cast<int>(i) + 1);
      CHECK(report.axioms[i].holds);
      CHECK_FALSE(report.axioms[i].detail.empty());
    }
  }
}

TEST_CASE("an injected duplicate class is reported with a witness") {
  AmalgamSpec psl = sample_psl2z();
  std::vector<VCClass> classes = enumerate_vc_classes(psl, 4);
  REQUIRE(classes.size() == 2);

  // Push the first class's line off itself and append the result as if it
  // were a genuinely new class.
  NormalForm x = word(psl, "g1:1");
  Axis moved = translate_axis(psl, classes[0].axis, x);
  GeodesicStab moved_stab = geodesic_stabilizer(psl, moved);
  classes.push_back(classify_vc(psl, moved, moved_stab));

  AdaptedReport report = check_adapted(psl, classes, 4, 4);
  CHECK_FALSE(report.all_hold);
  REQUIRE(report.axioms.size() == 4);

  CHECK_FALSE(report.axioms[0].holds);
  CHECK(report.axioms[0].detail.find("share an axis under x = ") != std::string::npos);
  CHECK_FALSE(report.axioms[1].holds);
  CHECK(report.axioms[1].detail.find("x = ") != std::string::npos);
  CHECK(report.axioms[1].detail.find("onto the axis of class") != std::string::npos);
}

TEST_CASE("adapted-family checks validate their inputs") {
  AmalgamSpec psl = sample_psl2z();
  std::vector<VCClass> classes = enumerate_vc_classes(psl, 4);
  CHECK_ERRC(check_adapted(psl, {}, 4, 4), errc::invalid_argument);
  CHECK_ERRC(check_adapted(psl, classes, 1, 4), errc::invalid_argument);
  CHECK_ERRC(check_adapted(psl, classes, 4, -1), errc::invalid_argument);
}

TEST_CASE("labels for rings and twists") {
  FiniteGroup trivial;
  FiniteGroup z2 = cyclic_group(2);
  CHECK(ring_label(iso_fingerprint(trivial)) == "R");
  CHECK(ring_label(iso_fingerprint(z2)) == "R[Z/2]");
  CHECK(alpha_label({}) == "id");
  CHECK(alpha_label({0, 1}) == "id");
  CHECK(alpha_label({0, 2, 1}) == "[0,2,1]");
}

TEST_CASE("splitting reports assemble the summand labels") {
  SplittingReport din = splitting_report(sample_dinfty(), 4);
  CHECK(din.left_label == "Nil^W(R; R[Z/2 − 1], R[Z/2 − 1])");
  CHECK(din.max_syllables == 4);
  CHECK(din.complete);
  REQUIRE(din.summands.size() == 1);
  CHECK(din.summands[0].nil_label == "Nil^W(R; R[Z/2 − 1], R[Z/2 − 1])");
  CHECK(din.summands[0].v_prime_label == "NK(R, id)");

  SplittingReport psl = splitting_report(sample_psl2z(), 4);
  CHECK(psl.left_label == "Nil^W(R; R[Z/2 − 1], R[Z/3 − 1])");
  CHECK_FALSE(psl.complete);
  REQUIRE(psl.summands.size() == 2);
  CHECK(psl.summands[0].nil_label == "2 × NK(R, id)");
  CHECK(psl.summands[0].v_prime_label.empty());
  CHECK(psl.summands[1].nil_label == "Nil^W(R; R[Z/2 − 1], R[Z/2 − 1])");
  CHECK(psl.summands[1].v_prime_label == "NK(R, id)");

  SplittingReport sl = splitting_report(sample_sl2z(), 4);
  CHECK(sl.left_label == "Nil^W(R[Z/2]; R[Z/4 − Z/2], R[Z/6 − Z/2])");
  CHECK_FALSE(sl.complete);
  REQUIRE(sl.summands.size() == 2);
  CHECK(sl.summands[0].nil_label == "2 × NK(R[Z/2], id)");
  CHECK(sl.summands[1].nil_label == "Nil^W(R[Z/2]; R[Z/4 − Z/2], R[Z/4 − Z/2])");
  CHECK(sl.summands[1].v_prime_label == "NK(R[Z/2], id)");
}
