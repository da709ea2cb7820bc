#pragma once

// Shared construction helpers for tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "tricrit/enumerate.hpp"
#include "tricrit/graph.hpp"

namespace tricrit::test {

// Bicolored path on 2n vertices: c0 - c1 - ... - c_{2n-1}, colors
// alternating starting with White; built directly, does not go through the
// enumerator.
inline PointGraph colored_path(int n, VertexKind other = VertexKind::Black) {
  PointGraph pg;
  pg.n = n;
  pg.other = other;
  for (int i = 0; i < 2 * n; ++i)
    pg.graph.add_vertex(i % 2 == 0 ? VertexKind::White : other);
  for (int i = 0; i + 1 < 2 * n; ++i) pg.graph.add_edge(i, i + 1);
  return pg;
}

// The unique admissible gluing result at n=1: a junction with one neighbor
// of each color.
inline DistinguishingGraph star_graph() {
  Graph g;
  int w = g.add_vertex(VertexKind::White);
  int b = g.add_vertex(VertexKind::Black);
  int gr = g.add_vertex(VertexKind::Gray);
  int t = g.add_vertex(VertexKind::Junction);
  g.add_edge(w, t);
  g.add_edge(b, t);
  g.add_edge(gr, t);
  return as_distinguishing(g);
}

// The unique complexity-2 class.
inline DistinguishingGraph complexity2_graph() {
  auto types = enumerate_point_graphs(2);
  PointGraph a = types.front();
  PointGraph b = recolor(a, kSwapBlackGray);
  for (const GluingMap& m : enumerate_gluings(a, b)) {
    DistinguishingGraph g = glue(a, b, m);
    if (validate_distinguishing(g).ok()) return g;
  }
  throw std::logic_error("no admissible gluing at n=2");
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

template <typename T>
T relabeled_copy(const T& g, std::mt19937& rng) {
  T out = g;
  out.graph = g.graph.relabeled(random_permutation(g.graph.vertex_count(), rng));
  return out;
}

}  // namespace tricrit::test
