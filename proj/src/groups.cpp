#include "groups.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace nilsplit {

namespace {

// (a*b)(p) = a[b[p]]: b acts first.
std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t p = 0; p < r.size(); ++p) r[p] = a[b[p]];
  return r;
}

uint64_t fnv1a_mix(uint64_t h, uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (i * 8)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

std::string guess_name(const Fingerprint& fp) {
  const int n = fp.order;
  if (n == 1) return "1";
  auto count_of = [&](int ord) {
    for (const auto& [o, c] : fp.order_histogram)
      if (o == ord) return c;
    return 0;
  };
  const bool cyclic = count_of(n) > 0;
  if (cyclic && n <= 12) return "Z/" + std::to_string(n);
  if (n <= 12) {
    if (n == 4) return "Z/2 x Z/2";
    if (n == 6) return "S3";
    if (n == 8 && fp.center_order == 2) {
      if (count_of(2) == 5) return "D4";
      if (count_of(2) == 1 && count_of(4) == 6) return "Q8";
    }
    if (n == 10 && !fp.abelian) return "D5";
    if (n == 12) {
      if (fp.center_order == 1 && count_of(3) == 8) return "A4";
      if (fp.center_order == 2 && count_of(2) == 7) return "D6";
      if (fp.center_order == 2 && count_of(2) == 1 && count_of(4) == 6) return "Dic3";
    }
  }
  uint64_t h = 1469598103934665603ull;
  h = fnv1a_mix(h, static_cast<uint64_t>(n));
  for (const auto& [o, c] : fp.order_histogram) {
    h = fnv1a_mix(h, static_cast<uint64_t>(o));
    h = fnv1a_mix(h, static_cast<uint64_t>(c));
  }
  h = fnv1a_mix(h, static_cast<uint64_t>(fp.center_order));
  h = fnv1a_mix(h, fp.abelian ? 1 : 0);
  uint32_t folded = static_cast<uint32_t>(h ^ (h >> 32));
  std::ostringstream os;
  os << "order-" << n << " group (" << std::hex << folded << ")";
  return os.str();
}

}  // namespace

FiniteGroup group_from_table(const std::vector<std::vector<Elt>>& table, int order_cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(errc::not_a_group, "empty multiplication table");
  if (order_cap > 0 && n > order_cap)
    fail(errc::order_cap_exceeded,
         "group order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      fail(errc::invalid_argument, "multiplication table is not square");
    for (Elt x : row)
      if (x < 0 || x >= n) fail(errc::invalid_argument, "table entry out of range");
  }

  FiniteGroup g;
  g.order = n;
  g.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[static_cast<size_t>(a) * n + b] = table[a][b];

  for (int x = 0; x < n; ++x)
    if (g.mul(0, x) != x || g.mul(x, 0) != x)
      fail(errc::not_a_group, "element 0 is not an identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          fail(errc::not_a_group, "associativity fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) {
        g.inverse[a] = b;
        break;
      }
    if (g.inverse[a] < 0) fail(errc::not_a_group, "no inverse for element " + std::to_string(a));
  }
  return g;
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators,
                                    int order_cap) {
  if (generators.empty()) return FiniteGroup{};

  const size_t m = generators[0].size();
  if (m == 0) fail(errc::not_a_permutation, "generator acts on an empty point set");
  for (const auto& p : generators) {
    if (p.size() != m) fail(errc::not_a_permutation, "generators act on different point counts");
    std::vector<bool> seen(m, false);
    for (int x : p) {
      if (x < 0 || x >= static_cast<int>(m) || seen[x])
        fail(errc::not_a_permutation, "generator is not a bijection");
      seen[x] = true;
    }
  }

  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  std::queue<int> work;
  work.push(0);
  while (!work.empty()) {
    int cur = work.front();
    work.pop();
    for (const auto& gen : generators) {
      auto next = compose(elems[cur], gen);
      auto [it, fresh] = index.emplace(std::move(next), static_cast<int>(elems.size()));
      if (fresh) {
        elems.push_back(it->first);
        if (order_cap > 0 && static_cast<int>(elems.size()) > order_cap)
          fail(errc::order_cap_exceeded, "permutation closure exceeds order cap " +
                                             std::to_string(order_cap));
        work.push(static_cast<int>(elems.size()) - 1);
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  FiniteGroup g;
  g.order = n;
  g.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(compose(elems[a], elems[b]));
      if (it == index.end()) fail(errc::internal, "permutation closure is not closed");
      g.table[static_cast<size_t>(a) * n + b] = it->second;
    }
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) {
        g.inverse[a] = b;
        break;
      }
  return g;
}

std::vector<Elt> subgroup_closure(const FiniteGroup& g, const std::vector<Elt>& seed) {
  for (Elt s : seed)
    if (s < 0 || s >= g.order) fail(errc::invalid_argument, "seed element out of range");
  std::set<Elt> have{0};
  std::vector<Elt> work{0};
  while (!work.empty()) {
    Elt x = work.back();
    work.pop_back();
    for (Elt s : seed) {
      Elt y = g.mul(x, s);
      if (have.insert(y).second) work.push_back(y);
    }
  }
  return std::vector<Elt>(have.begin(), have.end());
}

CosetDecomposition left_cosets(const FiniteGroup& g, const std::vector<Elt>& sub) {
  if (sub.empty()) fail(errc::not_a_subgroup, "empty subgroup");
  std::set<Elt> s;
  for (Elt x : sub) {
    if (x < 0 || x >= g.order) fail(errc::invalid_argument, "subgroup element out of range");
    s.insert(x);
  }
  if (!s.count(0)) fail(errc::not_a_subgroup, "subset does not contain the identity");
  for (Elt a : s)
    for (Elt b : s)
      if (!s.count(g.mul(a, b))) fail(errc::not_a_subgroup, "subset is not closed");

  CosetDecomposition out;
  std::vector<bool> assigned(g.order, false);
  for (Elt x = 0; x < g.order; ++x) {
    if (assigned[x]) continue;
    std::set<Elt> coset;
    for (Elt y : s) coset.insert(g.mul(x, y));
    for (Elt y : coset) assigned[y] = true;
    // x is the minimal unassigned element, so it is minimal in its coset.
    if (*coset.begin() != x) fail(errc::internal, "coset minimality broken");
    out.cosets.emplace_back(coset.begin(), coset.end());
    out.transversal.push_back(x);
  }
  return out;
}

Monomorphism check_monomorphism(const FiniteGroup& h, const FiniteGroup& g,
                                const std::vector<Elt>& map) {
  if (static_cast<int>(map.size()) != h.order)
    fail(errc::invalid_argument, "embedding list length differs from source order");
  std::set<Elt> image;
  for (Elt x : map) {
    if (x < 0 || x >= g.order) fail(errc::invalid_argument, "embedding image out of range");
    if (!image.insert(x).second) fail(errc::not_injective, "embedding repeats an image element");
  }
  for (Elt a = 0; a < h.order; ++a)
    for (Elt b = 0; b < h.order; ++b)
      if (map[h.mul(a, b)] != g.mul(map[a], map[b]))
        fail(errc::not_homomorphism, "embedding breaks multiplication at (" + std::to_string(a) +
                                         "," + std::to_string(b) + ")");
  return Monomorphism{h, g, map};
}

Automorphism check_automorphism(const FiniteGroup& g, const std::vector<Elt>& map) {
  if (static_cast<int>(map.size()) != g.order)
    fail(errc::invalid_argument, "automorphism list length differs from group order");
  std::set<Elt> image;
  for (Elt x : map) {
    if (x < 0 || x >= g.order) fail(errc::invalid_argument, "automorphism image out of range");
    if (!image.insert(x).second) fail(errc::not_injective, "automorphism repeats an image");
  }
  for (Elt a = 0; a < g.order; ++a)
    for (Elt b = 0; b < g.order; ++b)
      if (map[g.mul(a, b)] != g.mul(map[a], map[b]))
        fail(errc::not_homomorphism, "automorphism breaks multiplication");
  return Automorphism{g, map};
}

std::vector<std::vector<Elt>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Elt>> out;
  std::vector<bool> assigned(g.order, false);
  for (Elt a = 0; a < g.order; ++a) {
    if (assigned[a]) continue;
    std::set<Elt> cls;
    for (Elt x = 0; x < g.order; ++x) cls.insert(g.mul(g.mul(x, a), g.inv(x)));
    for (Elt y : cls) assigned[y] = true;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

int element_order(const FiniteGroup& g, Elt a) {
  if (a < 0 || a >= g.order) fail(errc::invalid_argument, "element out of range");
  int k = 1;
  Elt x = a;
  while (x != 0) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

Fingerprint iso_fingerprint(const FiniteGroup& g) {
  Fingerprint fp;
  fp.order = g.order;
  std::map<int, int> hist;
  for (Elt a = 0; a < g.order; ++a) ++hist[element_order(g, a)];
  fp.order_histogram.assign(hist.begin(), hist.end());
  fp.center_order = 0;
  fp.abelian = true;
  for (Elt a = 0; a < g.order; ++a) {
    bool central = true;
    for (Elt b = 0; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        central = false;
        fp.abelian = false;
        break;
      }
    if (central) ++fp.center_order;
  }
  fp.name = guess_name(fp);
  return fp;
}

std::string fingerprint_to_string(const Fingerprint& fp) {
  std::ostringstream os;
  os << fp.name << " (order " << fp.order << ", element orders";
  for (const auto& [o, c] : fp.order_histogram) os << " " << o << ":" << c;
  os << ", center " << fp.center_order << (fp.abelian ? ", abelian)" : ")");
  return os.str();
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
  return a.order == b.order && a.order_histogram == b.order_histogram &&
         a.center_order == b.center_order && a.abelian == b.abelian && a.name == b.name;
}

}  // namespace nilsplit
