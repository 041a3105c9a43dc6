#pragma once

#include <compare>
#include <string>
#include <vector>

#include "groups.hpp"

namespace nilsplit {

// One syllable of a normal form: a non-identity left-coset representative of H
// in the chosen factor (1 or 2).
struct Syllable {
  int factor = 1;
  Elt rep = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Unique normal form s_1 s_2 ... s_n * tail with strictly alternating syllable
// factors and the H-part collected on the right.
struct NormalForm {
  std::vector<Syllable> syllables;
  Elt tail = 0;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Total order used for canonical choices everywhere: syllable count first,
// then syllables lexicographically, then the tail.
std::strong_ordering nf_order(const NormalForm& a, const NormalForm& b);
inline bool operator<(const NormalForm& a, const NormalForm& b) { return nf_order(a, b) < 0; }

// A letter of an unreduced word: factor 0 means an H-letter, 1/2 a factor letter.
struct Letter {
  int factor = 0;
  Elt index = 0;
};
using Word = std::vector<Letter>;

// Amalgamated product of g1 and g2 over h, with fixed coset transversals and
// the decomposition tables x = rep * emb(h') precomputed for both factors.
struct AmalgamSpec {
  FiniteGroup g1, g2, h;
  Monomorphism emb1, emb2;
  std::vector<Elt> transversal1, transversal2;
  std::string name;

  std::vector<Elt> coset_rep1, h_part1;  // indexed by elements of g1
  std::vector<Elt> coset_rep2, h_part2;  // indexed by elements of g2

  const FiniteGroup& factor(int i) const { return i == 1 ? g1 : g2; }
  const std::vector<Elt>& transversal(int i) const {
    return i == 1 ? transversal1 : transversal2;
  }
  Elt emb(int i, Elt hx) const { return i == 1 ? emb1.map[hx] : emb2.map[hx]; }
  Elt coset_rep(int i, Elt x) const { return i == 1 ? coset_rep1[x] : coset_rep2[x]; }
  Elt h_part(int i, Elt x) const { return i == 1 ? h_part1[x] : h_part2[x]; }
  int index1() const { return static_cast<int>(transversal1.size()); }
  int index2() const { return static_cast<int>(transversal2.size()); }
};

AmalgamSpec build_amalgam(const FiniteGroup& g1, const FiniteGroup& g2, const FiniteGroup& h,
                          const std::vector<Elt>& emb1, const std::vector<Elt>& emb2,
                          const std::string& name);

// Normal form of a word, folding letters into the running form left to right;
// the running tail is pushed into each incoming letter through the matching
// embedding, and the coset decomposition emits or merges syllables.
NormalForm reduce(const AmalgamSpec& spec, const Word& word);

NormalForm nf_multiply(const AmalgamSpec& spec, const NormalForm& a, const NormalForm& b);
NormalForm nf_inverse(const AmalgamSpec& spec, const NormalForm& a);
// x * g * x^-1.
NormalForm nf_conjugate(const AmalgamSpec& spec, const NormalForm& g, const NormalForm& x);
NormalForm nf_power(const AmalgamSpec& spec, const NormalForm& a, int k);

inline NormalForm nf_identity() { return NormalForm{}; }

// g = conjugator * core * conjugator^-1 where the core either has at most one
// syllable or starts and ends in different factors. The conjugator is the
// product of removed prefix syllables.
struct CyclicReduction {
  NormalForm core;
  NormalForm conjugator;
};
CyclicReduction cyclic_reduce(const AmalgamSpec& spec, const NormalForm& g);

// Word syntax: whitespace-separated letters "g1:<k>", "g2:<k>", "h:<k>".
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);
std::string nf_to_string(const NormalForm& a);  // identity prints as "h:0"

}  // namespace nilsplit
