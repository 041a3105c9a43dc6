#pragma once

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace nilsplit {

// Element of a finite group, identified by its index in the multiplication table.
using Elt = int;

inline constexpr int kDefaultOrderCap = 512;

// Finite group on indices 0..order-1. The identity is always element 0 and the
// table is row-major: table[a*order + b] = a*b.
struct FiniteGroup {
  int order = 1;
  std::vector<Elt> table = {0};
  std::vector<Elt> inverse = {0};

  Elt mul(Elt a, Elt b) const { return table[static_cast<size_t>(a) * order + b]; }
  Elt inv(Elt a) const { return inverse[a]; }
};

// Injective homomorphism source -> target, as the image list map[x].
struct Monomorphism {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elt> map;
};

struct Automorphism {
  FiniteGroup group;
  std::vector<Elt> map;
};

// Left cosets gS, ordered by minimal element; the identity coset comes first
// and each transversal entry is the minimal element of its coset.
struct CosetDecomposition {
  std::vector<std::vector<Elt>> cosets;
  std::vector<Elt> transversal;
};

// Cheap isomorphism invariants plus a name guess for small orders.
struct Fingerprint {
  int order = 1;
  std::vector<std::pair<int, int>> order_histogram;  // (element order, count), ascending
  int center_order = 1;
  bool abelian = true;
  std::string name = "1";
};

FiniteGroup group_from_table(const std::vector<std::vector<Elt>>& table,
                             int order_cap = kDefaultOrderCap);

// Closure of the given permutations under composition, in breadth-first
// discovery order (right multiplication by the generators in input order).
// Element 0 is the identity permutation.
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators,
                                    int order_cap = kDefaultOrderCap);

// Subgroup generated by the seed elements, ascending. The empty seed gives {0}.
std::vector<Elt> subgroup_closure(const FiniteGroup& g, const std::vector<Elt>& seed);

CosetDecomposition left_cosets(const FiniteGroup& g, const std::vector<Elt>& sub);

Monomorphism check_monomorphism(const FiniteGroup& h, const FiniteGroup& g,
                                const std::vector<Elt>& map);

Automorphism check_automorphism(const FiniteGroup& g, const std::vector<Elt>& map);

// Conjugacy classes, each sorted ascending, ordered by minimal element.
std::vector<std::vector<Elt>> conjugacy_classes(const FiniteGroup& g);

int element_order(const FiniteGroup& g, Elt a);

Fingerprint iso_fingerprint(const FiniteGroup& g);

std::string fingerprint_to_string(const Fingerprint& fp);

bool operator==(const Fingerprint& a, const Fingerprint& b);

}  // namespace nilsplit
