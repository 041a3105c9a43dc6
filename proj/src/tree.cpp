#include "tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nilsplit {

namespace {

CellKey drop_trailing(CellKey key, int side) {
  if (!key.empty() && key.back().factor == side) key.pop_back();
  return key;
}

// Canonical form of a coset key after translation: strip the tail (edge) and
// a trailing syllable of the vertex side.
Vertex vertex_from_nf(const NormalForm& g, int side) {
  return Vertex{side, drop_trailing(g.syllables, side)};
}

std::vector<NormalForm> intersect_sorted(const std::vector<NormalForm>& a,
                                         const std::vector<NormalForm>& b) {
  std::vector<NormalForm> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        [](const NormalForm& x, const NormalForm& y) { return x < y; });
  return out;
}

}  // namespace

std::strong_ordering key_order(const CellKey& a, const CellKey& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool vertex_less(const Vertex& a, const Vertex& b) {
  if (auto c = key_order(a.key, b.key); c != 0) return c < 0;
  return a.side < b.side;
}

bool edge_less(const Edge& a, const Edge& b) { return key_order(a.key, b.key) < 0; }

Vertex vertex_key(const AmalgamSpec&, const NormalForm& g, int side) {
  if (side != 1 && side != 2) fail(errc::invalid_argument, "vertex side must be 1 or 2");
  return vertex_from_nf(g, side);
}

Edge edge_key(const AmalgamSpec&, const NormalForm& g) { return Edge{g.syllables}; }

Vertex act(const AmalgamSpec& spec, const NormalForm& g, const Vertex& v) {
  return vertex_from_nf(nf_multiply(spec, g, cell_rep(v)), v.side);
}

Edge act(const AmalgamSpec& spec, const NormalForm& g, const Edge& e) {
  return Edge{nf_multiply(spec, g, cell_rep(e)).syllables};
}

std::pair<Vertex, Vertex> edge_endpoints(const Edge& e) {
  return {Vertex{1, drop_trailing(e.key, 1)}, Vertex{2, drop_trailing(e.key, 2)}};
}

// Distance after translating u to the base vertex of its side: the image of v
// has key t_1...t_m, reached by the prefix edges, plus one base-edge step when
// the walk starts on the other side.
int distance(const AmalgamSpec& spec, const Vertex& u, const Vertex& v) {
  NormalForm z = nf_multiply(spec, nf_inverse(spec, cell_rep(u)), cell_rep(v));
  Vertex w = vertex_from_nf(z, v.side);
  if (w.key.empty()) return u.side == v.side ? 0 : 1;
  return static_cast<int>(w.key.size()) + (w.key.front().factor == u.side ? 0 : 1);
}

TreePath geodesic_path(const AmalgamSpec& spec, const Vertex& u, const Vertex& v) {
  NormalForm ru = cell_rep(u);
  NormalForm z = nf_multiply(spec, nf_inverse(spec, ru), cell_rep(v));
  Vertex w = vertex_from_nf(z, v.side);

  TreePath base;
  base.vertices.push_back(base_vertex(u.side));
  if (w.key.empty()) {
    if (u.side != v.side) {
      base.edges.push_back(base_edge());
      base.vertices.push_back(base_vertex(v.side));
    }
  } else {
    if (w.key.front().factor != u.side) {
      base.edges.push_back(base_edge());
      base.vertices.push_back(base_vertex(w.key.front().factor));
    }
    CellKey prefix;
    for (size_t i = 0; i < w.key.size(); ++i) {
      prefix.push_back(w.key[i]);
      base.edges.push_back(Edge{prefix});
      if (i + 1 < w.key.size())
        base.vertices.push_back(Vertex{w.key[i + 1].factor, prefix});
      else
        base.vertices.push_back(Vertex{v.side, prefix});
    }
  }

  TreePath out;
  for (const Vertex& x : base.vertices) out.vertices.push_back(act(spec, ru, x));
  for (const Edge& e : base.edges) out.edges.push_back(act(spec, ru, e));
  return out;
}

std::vector<NormalForm> local_stabilizer(const AmalgamSpec& spec, const Vertex& v) {
  NormalForm r = cell_rep(v);
  NormalForm ri = nf_inverse(spec, r);
  std::vector<NormalForm> out;
  const FiniteGroup& g = spec.factor(v.side);
  out.reserve(g.order);
  for (Elt x = 0; x < g.order; ++x) {
    NormalForm fx = reduce(spec, {Letter{v.side, x}});
    out.push_back(nf_multiply(spec, nf_multiply(spec, r, fx), ri));
  }
  return out;
}

std::vector<NormalForm> local_stabilizer(const AmalgamSpec& spec, const Edge& e) {
  NormalForm r = cell_rep(e);
  NormalForm ri = nf_inverse(spec, r);
  std::vector<NormalForm> out;
  out.reserve(spec.h.order);
  for (Elt hh = 0; hh < spec.h.order; ++hh) {
    NormalForm fh = reduce(spec, {Letter{0, hh}});
    out.push_back(nf_multiply(spec, nf_multiply(spec, r, fh), ri));
  }
  return out;
}

std::vector<NormalForm> path_stabilizer(const AmalgamSpec& spec, const TreePath& path) {
  if (path.vertices.empty()) fail(errc::invalid_argument, "empty path");
  if (path.edges.empty()) {
    auto out = local_stabilizer(spec, path.vertices.front());
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<NormalForm> acc = local_stabilizer(spec, path.edges.front());
  std::sort(acc.begin(), acc.end());
  for (size_t i = 1; i < path.edges.size(); ++i) {
    auto st = local_stabilizer(spec, path.edges[i]);
    std::sort(st.begin(), st.end());
    acc = intersect_sorted(acc, st);
  }
  return acc;
}

std::vector<NormalForm> transporter(const AmalgamSpec& spec, const Edge& e1, const Edge& e2) {
  NormalForm r1i = nf_inverse(spec, cell_rep(e1));
  NormalForm r2 = cell_rep(e2);
  std::vector<NormalForm> out;
  out.reserve(spec.h.order);
  for (Elt hh = 0; hh < spec.h.order; ++hh) {
    NormalForm fh = reduce(spec, {Letter{0, hh}});
    out.push_back(nf_multiply(spec, nf_multiply(spec, r2, fh), r1i));
  }
  if (static_cast<int>(out.size()) != spec.h.order)
    fail(errc::internal, "transporter size differs from the edge group order");
  return out;
}

std::vector<StarEntry> vertex_star(const AmalgamSpec& spec, const Vertex& v) {
  std::vector<StarEntry> out;
  const int other = 3 - v.side;
  Edge up{v.key};
  out.push_back(StarEntry{up, Vertex{other, drop_trailing(up.key, other)}});
  for (size_t i = 1; i < spec.transversal(v.side).size(); ++i) {
    CellKey key = v.key;
    key.push_back(Syllable{v.side, spec.transversal(v.side)[i]});
    out.push_back(StarEntry{Edge{key}, Vertex{other, key}});
  }
  return out;
}

AcylReport check_acylindrical(const AmalgamSpec& spec, int k, int radius) {
  if (k < 1) fail(errc::invalid_argument, "path length must be at least 1");
  if (radius < 1) fail(errc::invalid_argument, "radius must be at least 1");
  if (k > 2 * radius) fail(errc::invalid_argument, "path length exceeds the ball diameter");

  // Ball around the base edge: both endpoints at distance 0.
  std::map<Vertex, int, VertexLess> dist;
  std::vector<Vertex> order;
  for (int side : {1, 2}) {
    dist.emplace(base_vertex(side), 0);
    order.push_back(base_vertex(side));
  }
  for (size_t head = 0; head < order.size(); ++head) {
    Vertex cur = order[head];
    int d = dist.at(cur);
    if (d == radius) continue;
    for (const StarEntry& s : vertex_star(spec, cur))
      if (dist.emplace(s.neighbor, d + 1).second) order.push_back(s.neighbor);
  }

  AcylReport report;
  report.max_stab_order = 0;

  // Non-backtracking walks of k edges, each path visited once per direction;
  // keep the direction whose start vertex is canonically smaller.
  for (const Vertex& start : order) {
    std::vector<TreePath> stack;
    TreePath init;
    init.vertices.push_back(start);
    stack.push_back(init);
    while (!stack.empty()) {
      TreePath cur = std::move(stack.back());
      stack.pop_back();
      if (static_cast<int>(cur.edges.size()) == k) {
        if (vertex_less(cur.vertices.back(), cur.vertices.front())) continue;
        int n = static_cast<int>(path_stabilizer(spec, cur).size());
        if (n > report.max_stab_order) {
          report.max_stab_order = n;
          report.witness = cur;
        }
        continue;
      }
      const Vertex& tip = cur.vertices.back();
      for (const StarEntry& s : vertex_star(spec, tip)) {
        if (cur.vertices.size() >= 2 && s.neighbor == cur.vertices[cur.vertices.size() - 2])
          continue;
        if (!dist.count(s.neighbor)) continue;
        TreePath next = cur;
        next.edges.push_back(s.via);
        next.vertices.push_back(s.neighbor);
        stack.push_back(std::move(next));
      }
    }
  }
  report.holds = true;  // all path stabilizers embed in a finite edge group
  return report;
}

std::string cell_to_string(const Vertex& v) {
  return "v" + std::to_string(v.side) + "[" + nf_to_string(NormalForm{v.key, 0}) + "]";
}

std::string cell_to_string(const Edge& e) {
  return "e[" + nf_to_string(NormalForm{e.key, 0}) + "]";
}

std::string path_to_string(const TreePath& p) {
  std::string s;
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    if (i > 0) s += " -- " + cell_to_string(p.edges[i - 1]) + " -- ";
    s += cell_to_string(p.vertices[i]);
  }
  return s;
}

}  // namespace nilsplit
