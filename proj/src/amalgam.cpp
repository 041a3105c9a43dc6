#include "amalgam.hpp"

#include <algorithm>
#include <sstream>

namespace nilsplit {

namespace {

// Fold one letter x of factor i into the running form (syllables, tail).
// The tail moves into x through emb_i; the product is split as rep * emb_i(h')
// against the transversal, merging with a trailing syllable of the same
// factor. Each case leaves a valid normal form, so no cascade is needed.
void absorb(const AmalgamSpec& s, std::vector<Syllable>& syl, Elt& tail, int i, Elt x) {
  const FiniteGroup& gi = s.factor(i);
  Elt y = gi.mul(s.emb(i, tail), x);
  if (!syl.empty() && syl.back().factor == i) {
    y = gi.mul(syl.back().rep, y);
    syl.pop_back();
  }
  Elt t = s.coset_rep(i, y);
  tail = s.h_part(i, y);
  if (t != 0) syl.push_back(Syllable{i, t});
}

}  // namespace

std::strong_ordering nf_order(const NormalForm& a, const NormalForm& b) {
  if (auto c = a.syllables.size() <=> b.syllables.size(); c != 0) return c;
  for (size_t i = 0; i < a.syllables.size(); ++i)
    if (auto c = a.syllables[i] <=> b.syllables[i]; c != 0) return c;
  return a.tail <=> b.tail;
}

AmalgamSpec build_amalgam(const FiniteGroup& g1, const FiniteGroup& g2, const FiniteGroup& h,
                          const std::vector<Elt>& emb1, const std::vector<Elt>& emb2,
                          const std::string& name) {
  AmalgamSpec s;
  s.g1 = g1;
  s.g2 = g2;
  s.h = h;
  s.name = name;
  s.emb1 = check_monomorphism(h, g1, emb1);
  s.emb2 = check_monomorphism(h, g2, emb2);

  for (int i : {1, 2}) {
    const FiniteGroup& gi = s.factor(i);
    std::vector<Elt> image = i == 1 ? emb1 : emb2;
    std::sort(image.begin(), image.end());
    CosetDecomposition dec = left_cosets(gi, image);
    auto& transversal = i == 1 ? s.transversal1 : s.transversal2;
    transversal = dec.transversal;
    if (transversal.size() < 2)
      fail(errc::degenerate_amalgam,
           "the edge group has index 1 in factor " + std::to_string(i));

    auto& rep = i == 1 ? s.coset_rep1 : s.coset_rep2;
    auto& hp = i == 1 ? s.h_part1 : s.h_part2;
    rep.assign(gi.order, -1);
    hp.assign(gi.order, -1);
    for (Elt t : transversal)
      for (Elt hh = 0; hh < h.order; ++hh) {
        Elt x = gi.mul(t, s.emb(i, hh));
        if (rep[x] != -1) fail(errc::internal, "coset decomposition is not unique");
        rep[x] = t;
        hp[x] = hh;
      }
    for (Elt x = 0; x < gi.order; ++x)
      if (rep[x] == -1) fail(errc::internal, "coset decomposition misses an element");
  }
  return s;
}

NormalForm reduce(const AmalgamSpec& spec, const Word& word) {
  NormalForm out;
  for (const Letter& l : word) {
    if (l.factor == 0) {
      if (l.index < 0 || l.index >= spec.h.order)
        fail(errc::invalid_letter, "h-letter index " + std::to_string(l.index) + " out of range");
      out.tail = spec.h.mul(out.tail, l.index);
    } else if (l.factor == 1 || l.factor == 2) {
      if (l.index < 0 || l.index >= spec.factor(l.factor).order)
        fail(errc::invalid_letter, "g" + std::to_string(l.factor) + "-letter index " +
                                       std::to_string(l.index) + " out of range");
      absorb(spec, out.syllables, out.tail, l.factor, l.index);
    } else {
      fail(errc::invalid_letter, "letter factor must be 0, 1 or 2");
    }
  }
  return out;
}

NormalForm nf_multiply(const AmalgamSpec& spec, const NormalForm& a, const NormalForm& b) {
  NormalForm out = a;
  for (const Syllable& s : b.syllables) absorb(spec, out.syllables, out.tail, s.factor, s.rep);
  out.tail = spec.h.mul(out.tail, b.tail);
  return out;
}

NormalForm nf_inverse(const AmalgamSpec& spec, const NormalForm& a) {
  Word w;
  w.push_back(Letter{0, spec.h.inv(a.tail)});
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
    w.push_back(Letter{it->factor, spec.factor(it->factor).inv(it->rep)});
  return reduce(spec, w);
}

NormalForm nf_conjugate(const AmalgamSpec& spec, const NormalForm& g, const NormalForm& x) {
  return nf_multiply(spec, nf_multiply(spec, x, g), nf_inverse(spec, x));
}

NormalForm nf_power(const AmalgamSpec& spec, const NormalForm& a, int k) {
  NormalForm base = k < 0 ? nf_inverse(spec, a) : a;
  int n = k < 0 ? -k : k;
  NormalForm out;
  for (int i = 0; i < n; ++i) out = nf_multiply(spec, out, base);
  return out;
}

CyclicReduction cyclic_reduce(const AmalgamSpec& spec, const NormalForm& g) {
  CyclicReduction out{g, NormalForm{}};
  size_t guard = g.syllables.size() + 1;
  while (out.core.syllables.size() >= 2 &&
         out.core.syllables.front().factor == out.core.syllables.back().factor) {
    if (guard-- == 0) fail(errc::internal, "cyclic reduction does not terminate");
    NormalForm p{{out.core.syllables.front()}, 0};
    size_t before = out.core.syllables.size();
    out.core = nf_multiply(spec, nf_multiply(spec, nf_inverse(spec, p), out.core), p);
    if (out.core.syllables.size() >= before)
      fail(errc::internal, "cyclic reduction step did not shorten the core");
    out.conjugator = nf_multiply(spec, out.conjugator, p);
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int factor;
    size_t off;
    if (tok.rfind("g1:", 0) == 0) {
      factor = 1;
      off = 3;
    } else if (tok.rfind("g2:", 0) == 0) {
      factor = 2;
      off = 3;
    } else if (tok.rfind("h:", 0) == 0) {
      factor = 0;
      off = 2;
    } else {
      fail(errc::parse_error, "bad word letter '" + tok + "' (expected g1:<k>, g2:<k> or h:<k>)");
    }
    const std::string num = tok.substr(off);
    if (num.empty() || num.size() > 9 || num.find_first_not_of("0123456789") != std::string::npos)
      fail(errc::parse_error, "bad letter index in '" + tok + "'");
    out.push_back(Letter{factor, std::stoi(num)});
  }
  return out;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += ' ';
    s += l.factor == 0 ? "h" : "g" + std::to_string(l.factor);
    s += ':';
    s += std::to_string(l.index);
  }
  return s;
}

std::string nf_to_string(const NormalForm& a) {
  if (a.syllables.empty() && a.tail == 0) return "h:0";
  std::string s;
  for (const Syllable& syl : a.syllables) {
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(syl.factor) + ":" + std::to_string(syl.rep);
  }
  if (a.tail != 0) {
    if (!s.empty()) s += ' ';
    s += "h:" + std::to_string(a.tail);
  }
  return s;
}

}  // namespace nilsplit
