#pragma once

#include <string>
#include <utility>
#include <vector>

#include "amalgam.hpp"

namespace nilsplit {

// Canonical key of a coset cell: the syllables of the unique shortest coset
// representative. Vertices on side i drop a trailing factor-i syllable,
// edges keep all syllables; tails never appear in keys.
using CellKey = std::vector<Syllable>;

std::strong_ordering key_order(const CellKey& a, const CellKey& b);

struct Vertex {
  int side = 1;  // 1 for g G1 cosets, 2 for g G2 cosets
  CellKey key;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  CellKey key;  // g H coset
  friend bool operator==(const Edge&, const Edge&) = default;
};

bool vertex_less(const Vertex& a, const Vertex& b);
bool edge_less(const Edge& a, const Edge& b);

struct VertexLess {
  bool operator()(const Vertex& a, const Vertex& b) const { return vertex_less(a, b); }
};
struct EdgeLess {
  bool operator()(const Edge& a, const Edge& b) const { return edge_less(a, b); }
};

// Alternating vertex/edge sequence without backtracking; edges[i] joins
// vertices[i] and vertices[i+1].
struct TreePath {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

Vertex vertex_key(const AmalgamSpec& spec, const NormalForm& g, int side);
Edge edge_key(const AmalgamSpec& spec, const NormalForm& g);

inline NormalForm cell_rep(const Vertex& v) { return NormalForm{v.key, 0}; }
inline NormalForm cell_rep(const Edge& e) { return NormalForm{e.key, 0}; }
inline Vertex base_vertex(int side) { return Vertex{side, {}}; }
inline Edge base_edge() { return Edge{}; }

Vertex act(const AmalgamSpec& spec, const NormalForm& g, const Vertex& v);
Edge act(const AmalgamSpec& spec, const NormalForm& g, const Edge& e);

// Endpoints of an edge, as the (side 1, side 2) pair.
std::pair<Vertex, Vertex> edge_endpoints(const Edge& e);

int distance(const AmalgamSpec& spec, const Vertex& u, const Vertex& v);
TreePath geodesic_path(const AmalgamSpec& spec, const Vertex& u, const Vertex& v);

// Stabilizer elements in deterministic order: w x w^-1 over the full vertex
// group (resp. w h w^-1 over the edge group), x ascending.
std::vector<NormalForm> local_stabilizer(const AmalgamSpec& spec, const Vertex& v);
std::vector<NormalForm> local_stabilizer(const AmalgamSpec& spec, const Edge& e);

// Pointwise fixer of a path: the intersection of its edge stabilizers
// (the vertex stabilizer for a single-vertex path).
std::vector<NormalForm> path_stabilizer(const AmalgamSpec& spec, const TreePath& path);

// All g with g * e1 = e2; always exactly |H| elements.
std::vector<NormalForm> transporter(const AmalgamSpec& spec, const Edge& e1, const Edge& e2);

// Incident edges and opposite vertices, deterministic: the edge keyed by the
// vertex key itself first, then one edge per non-identity transversal entry.
struct StarEntry {
  Edge via;
  Vertex neighbor;
};
std::vector<StarEntry> vertex_star(const AmalgamSpec& spec, const Vertex& v);

struct AcylReport {
  bool holds = true;
  int max_stab_order = 0;
  TreePath witness;
};

// Scan every non-backtracking path of length k inside the radius-ball around
// the base edge and report the largest pointwise path stabilizer.
AcylReport check_acylindrical(const AmalgamSpec& spec, int k, int radius);

std::string cell_to_string(const Vertex& v);
std::string cell_to_string(const Edge& e);
std::string path_to_string(const TreePath& p);

}  // namespace nilsplit
