#pragma once

#include "labcount/multigraph.hpp"

// Small graphs used throughout the tests. Vertex letters in comments follow
// the usual picture: bowtie = triangles abc and cde sharing c (= vertex 2).

inline labcount::Multigraph path_graph(int n) {
  labcount::Multigraph g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

inline labcount::Multigraph cycle_graph(int n) {
  labcount::Multigraph g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  g.edges.emplace_back(0, n - 1);
  return g;
}

inline labcount::Multigraph complete_graph(int n) {
  labcount::Multigraph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

// Edges in the order ab, ac, bc, cd, ce, de.
inline labcount::Multigraph bowtie_graph() {
  labcount::Multigraph g;
  g.n = 5;
  g.edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
  return g;
}

// Edges ab, bc, ca, cd.
inline labcount::Multigraph triangle_pendant_graph() {
  labcount::Multigraph g;
  g.n = 4;
  g.edges = {{0, 1}, {1, 2}, {2, 0}, {2, 3}};
  return g;
}

inline labcount::Multigraph double_edge_graph() {
  labcount::Multigraph g;
  g.n = 2;
  g.edges = {{0, 1}, {0, 1}};
  return g;
}

inline labcount::Multigraph loop_vertex_graph() {
  labcount::Multigraph g;
  g.n = 1;
  g.edges = {{0, 0}};
  return g;
}

// v2 -> v1 and v1 -> v3 with center v1 = vertex 0 (file form: 1 0 / 0 2).
inline labcount::Multigraph oriented_k12_graph() {
  labcount::Multigraph g;
  g.n = 3;
  g.directed = true;
  g.edges = {{1, 0}, {0, 2}};
  return g;
}

inline labcount::Multigraph cyclic_k3_graph() {
  labcount::Multigraph g;
  g.n = 3;
  g.directed = true;
  g.edges = {{0, 1}, {1, 2}, {2, 0}};
  return g;
}
