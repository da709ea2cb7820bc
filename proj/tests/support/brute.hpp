#pragma once

// Brute-force oracles, deliberately independent of the canonical-labeling
// implementation: plain backtracking bijection search with only kind and
// degree pruning.

#include <functional>
#include <vector>

#include "tricrit/graph.hpp"
#include "tricrit/signs.hpp"

namespace tricrit::test {

// Kind-preserving bijection mapping edges onto edges. With use_signs, white
// signs must satisfy sign2(image(v)) == polarity * sign1(v).
inline bool brute_isomorphic(const Graph& g1, const Graph& g2, bool use_signs = false,
                             int polarity = +1) {
  const int n = g1.vertex_count();
  if (n != g2.vertex_count()) return false;
  for (VertexKind k : {VertexKind::Region, VertexKind::White, VertexKind::Black,
                       VertexKind::Gray, VertexKind::Junction})
    if (g1.count_of(k) != g2.count_of(k)) return false;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> dfs = [&](int v) -> bool {
    if (v == n) return true;
    for (int u = 0; u < n; ++u) {
      if (used[static_cast<std::size_t>(u)]) continue;
      if (g1.kind[static_cast<std::size_t>(v)] != g2.kind[static_cast<std::size_t>(u)]) continue;
      if (g1.degree(v) != g2.degree(u)) continue;
      if (use_signs && g1.kind[static_cast<std::size_t>(v)] == VertexKind::White &&
          g2.sign[static_cast<std::size_t>(u)] != polarity * g1.sign[static_cast<std::size_t>(v)])
        continue;
      bool ok = true;
      for (int w = 0; w < v; ++w)
        if (g1.has_edge(v, w) != g2.has_edge(u, image[static_cast<std::size_t>(w)])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = u;
      used[static_cast<std::size_t>(u)] = true;
      if (dfs(v + 1)) return true;
      used[static_cast<std::size_t>(u)] = false;
      image[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return dfs(0);
}

inline std::vector<std::vector<int>> brute_automorphisms(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> found;
  std::function<void(int)> dfs = [&](int v) {
    if (v == n) {
      found.push_back(image);
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (used[static_cast<std::size_t>(u)]) continue;
      if (g.kind[static_cast<std::size_t>(v)] != g.kind[static_cast<std::size_t>(u)]) continue;
      if (g.degree(v) != g.degree(u)) continue;
      bool ok = true;
      for (int w = 0; w < v; ++w)
        if (g.has_edge(v, w) != g.has_edge(u, image[static_cast<std::size_t>(w)])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = u;
      used[static_cast<std::size_t>(u)] = true;
      dfs(v + 1);
      used[static_cast<std::size_t>(u)] = false;
      image[static_cast<std::size_t>(v)] = -1;
    }
  };
  dfs(0);
  return found;
}

inline bool brute_conjugate(const DistinguishingGraph& a, const DistinguishingGraph& b) {
  return brute_isomorphic(a.graph, b.graph, true, +1) ||
         brute_isomorphic(a.graph, b.graph, true, -1);
}

inline bool brute_equivalent(const DistinguishingGraph& a, const DistinguishingGraph& b) {
  return brute_conjugate(a, b) || brute_conjugate(swap_with_signs(a), b);
}

// All trees on m vertices, one per isomorphism class, by filtering every
// (m-1)-edge subset of the complete graph and dedup by brute isomorphism.
inline std::vector<Graph> brute_trees_on(int m) {
  std::vector<std::pair<int, int>> all_edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) all_edges.emplace_back(a, b);
  std::vector<Graph> classes;
  std::vector<int> choice;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(choice.size()) == m - 1) {
      Graph g;
      for (int v = 0; v < m; ++v) g.add_vertex(VertexKind::Region);
      for (int idx : choice)
        g.add_edge(all_edges[static_cast<std::size_t>(idx)].first,
                   all_edges[static_cast<std::size_t>(idx)].second);
      if (!g.connected_on(g.full_mask()) || !g.acyclic_on(g.full_mask())) return;
      for (const Graph& c : classes)
        if (brute_isomorphic(c, g)) return;
      classes.push_back(std::move(g));
      return;
    }
    for (std::size_t i = start; i < all_edges.size(); ++i) {
      choice.push_back(static_cast<int>(i));
      rec(i + 1);
      choice.pop_back();
    }
  };
  rec(0);
  return classes;
}

}  // namespace tricrit::test
