#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "amalgam.hpp"
#include "test_helpers.hpp"

using namespace nilsplit;
using namespace nilsplit::testing;

#define CHECK_ERRC(expr, expected)            \
  do {                                        \
    bool caught = false;                      \
    try {                                     \
      (void)(expr);                           \
    } catch (const Error& e) {                \
      caught = true;                          \
      CHECK(e.code() == (expected));          \
    }                                         \
    CHECK_MESSAGE(caught, "expected " #expr " to throw"); \
  } while (0)

TEST_CASE("build_amalgam fills transversals and coset splits") {
  AmalgamSpec psl = sample_psl2z();
  CHECK(psl.index1() == 2);
  CHECK(psl.index2() == 3);
  CHECK(psl.transversal(1) == std::vector<Elt>{0, 1});
  CHECK(psl.transversal(2) == std::vector<Elt>{0, 1, 2});

  AmalgamSpec sl = sample_sl2z();
  CHECK(sl.index1() == 2);
  CHECK(sl.index2() == 3);
  for (int i : {1, 2}) {
    const FiniteGroup& gi = sl.factor(i);
    for (Elt x = 0; x < gi.order; ++x) {
      // every element splits uniquely as transversal rep * embedded H part
      CHECK(gi.mul(sl.coset_rep(i, x), sl.emb(i, sl.h_part(i, x))) == x);
    }
  }
  CHECK(sl.coset_rep(1, 3) == 1);
  CHECK(sl.h_part(1, 3) == 1);
  CHECK(sl.coset_rep(2, 5) == 2);
  CHECK(sl.h_part(2, 5) == 1);
}

TEST_CASE("index-one factors are rejected") {
  FiniteGroup z2 = cyclic_group(2);
  CHECK_ERRC(build_amalgam(z2, z2, z2, {0, 1}, {0, 1}, "bad"), errc::degenerate_amalgam);
}

TEST_CASE("embedding defects are rejected") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z4 = cyclic_group(4);
  CHECK_ERRC(build_amalgam(z4, z4, z2, {0, 1}, {0, 2}, "bad"), errc::not_homomorphism);
  CHECK_ERRC(build_amalgam(z4, z4, z2, {0, 0}, {0, 2}, "bad"), errc::not_injective);
}

TEST_CASE("reduction produces alternating normal forms") {
  AmalgamSpec psl = sample_psl2z();
  NormalForm ab = reduce(psl, parse_word("g1:1 g2:1"));
  REQUIRE(ab.syllables.size() == 2);
  CHECK(ab.syllables[0] == Syllable{1, 1});
  CHECK(ab.syllables[1] == Syllable{2, 1});
  CHECK(ab.tail == 0);

  CHECK(reduce(psl, parse_word("g1:1 g1:1")) == nf_identity());
  CHECK(reduce(psl, parse_word("g2:1 g2:2")) == nf_identity());
  CHECK(nf_to_string(reduce(psl, parse_word("g2:2 g2:2"))) == "g2:1");
}

TEST_CASE("both embedded copies of H are identified") {
  AmalgamSpec sl = sample_sl2z();
  NormalForm via_g1 = reduce(sl, parse_word("g1:2"));
  NormalForm via_g2 = reduce(sl, parse_word("g2:3"));
  NormalForm via_h = reduce(sl, parse_word("h:1"));
  CHECK(via_g1 == via_h);
  CHECK(via_g2 == via_h);
  CHECK(via_h.syllables.empty());
  CHECK(via_h.tail == 1);

  // a * b^6 * a = a^2, which is the embedded image of h:1
  NormalForm left = reduce(sl, parse_word("g1:1 g2:1"));
  NormalForm right = reduce(sl, parse_word("g2:5 g1:1"));
  CHECK(nf_multiply(sl, left, right) == via_h);
}

TEST_CASE("letters out of range are rejected") {
  AmalgamSpec psl = sample_psl2z();
  CHECK_ERRC(reduce(psl, parse_word("g1:7")), errc::invalid_letter);
  CHECK_ERRC(reduce(psl, parse_word("g2:3")), errc::invalid_letter);
  CHECK_ERRC(reduce(psl, parse_word("h:1")), errc::invalid_letter);
  CHECK_ERRC(reduce(psl, Word{Letter{5, 0}}), errc::invalid_letter);
}

TEST_CASE("word parsing round-trips and rejects junk") {
  Word w = parse_word("g1:1 g2:2  h:0");
  CHECK(word_to_string(w) == "g1:1 g2:2 h:0");
  CHECK(parse_word("").empty());
  CHECK_ERRC(parse_word("g3:1"), errc::parse_error);
  CHECK_ERRC(parse_word("g1:x"), errc::parse_error);
  CHECK_ERRC(parse_word("g1:"), errc::parse_error);
  CHECK_ERRC(parse_word("banana"), errc::parse_error);
  CHECK_ERRC(parse_word("g1:123456789123"), errc::parse_error);
}

TEST_CASE("normal form printing") {
  AmalgamSpec sl = sample_sl2z();
  CHECK(nf_to_string(nf_identity()) == "h:0");
  CHECK(nf_to_string(reduce(sl, parse_word("h:1"))) == "h:1");
  CHECK(nf_to_string(reduce(sl, parse_word("g1:1 g2:1 h:1"))) == "g1:1 g2:1 h:1");
  CHECK(nf_to_string(reduce(sl, parse_word("g1:3"))) == "g1:1 h:1");
}

TEST_CASE("group axioms hold for reduced arithmetic") {
  std::mt19937 rng(411);
  for (const AmalgamSpec& spec : {sample_dinfty(), sample_psl2z(), sample_sl2z()}) {
    for (int trial = 0; trial < 300; ++trial) {
      NormalForm u = random_element(rng, spec, 8);
      NormalForm v = random_element(rng, spec, 8);
      NormalForm w = random_element(rng, spec, 8);
      CHECK(nf_multiply(spec, nf_multiply(spec, u, v), w) ==
            nf_multiply(spec, u, nf_multiply(spec, v, w)));
      CHECK(nf_multiply(spec, u, nf_inverse(spec, u)) == nf_identity());
      CHECK(nf_multiply(spec, nf_inverse(spec, u), u) == nf_identity());
      CHECK(nf_power(spec, u, 3) ==
            nf_multiply(spec, u, nf_multiply(spec, u, u)));
      CHECK(nf_power(spec, u, -2) == nf_inverse(spec, nf_multiply(spec, u, u)));
    }
  }
}

TEST_CASE("independent reduction strategies agree") {
  std::mt19937 rng(412);
  for (const AmalgamSpec& spec : {sample_dinfty(), sample_psl2z(), sample_sl2z()}) {
    for (int trial = 0; trial < 500; ++trial) {
      Word w = random_word(rng, spec, 10);
      CHECK(reduce(spec, w) == prepend_reduce(spec, w));
    }
  }
}

TEST_CASE("cyclic reduction round-trips") {
  AmalgamSpec psl = sample_psl2z();
  NormalForm ab = reduce(psl, parse_word("g1:1 g2:1"));
  CyclicReduction red = cyclic_reduce(psl, ab);
  CHECK(red.core == ab);
  CHECK(red.conjugator == nf_identity());

  NormalForm aba = reduce(psl, parse_word("g1:1 g2:1 g1:1"));
  red = cyclic_reduce(psl, aba);
  CHECK(red.core.syllables.size() == 1);
  CHECK(nf_conjugate(psl, red.core, red.conjugator) == aba);

  std::mt19937 rng(413);
  for (const AmalgamSpec& spec : {sample_dinfty(), sample_psl2z(), sample_sl2z()}) {
    for (int trial = 0; trial < 300; ++trial) {
      NormalForm g = random_element(rng, spec, 9);
      CyclicReduction r = cyclic_reduce(spec, g);
      CHECK(nf_conjugate(spec, r.core, r.conjugator) == g);
      if (r.core.syllables.size() >= 2)
        CHECK(r.core.syllables.front().factor != r.core.syllables.back().factor);
    }
  }
}

TEST_CASE("normal form ordering is by length first") {
  AmalgamSpec psl = sample_psl2z();
  NormalForm e = nf_identity();
  NormalForm a = reduce(psl, parse_word("g1:1"));
  NormalForm b = reduce(psl, parse_word("g2:1"));
  NormalForm ab = reduce(psl, parse_word("g1:1 g2:1"));
  CHECK(e < a);
  CHECK(a < b);
  CHECK(b < ab);
  CHECK(nf_order(a, a) == std::strong_ordering::equal);
}
