#include "tricrit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <thread>

#include "tricrit/signs.hpp"

namespace tricrit {

const char* sign_mode_name(SignMode m) {
  return m == SignMode::Oriented ? "oriented" : "all";
}

namespace {

// Isomorph-free trees on m vertices, grown leaf by leaf with canonical-code
// dedup at every size. Every tree on k vertices arises from one on k-1 by
// removing a leaf, so the sweep is exhaustive.
std::vector<Graph> free_trees(int m) {
  Graph single;
  single.add_vertex(VertexKind::Region);
  std::vector<Graph> trees = {single};
  for (int k = 2; k <= m; ++k) {
    std::map<CanonicalCode, Graph> next;
    for (const Graph& t : trees) {
      for (int v = 0; v < t.vertex_count(); ++v) {
        Graph grown = t;
        int leaf = grown.add_vertex(VertexKind::Region);
        grown.add_edge(v, leaf);
        next.emplace(canonical_tree_code(grown), std::move(grown));
      }
    }
    trees.clear();
    trees.reserve(next.size());
    for (auto& [code, t] : next) trees.push_back(std::move(t));
  }
  return trees;
}

std::vector<int> bipartition_levels(const Graph& t) {
  std::vector<int> level(t.kind.size(), -1);
  std::queue<int> frontier;
  level[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int u : t.neighbors(v)) {
      if (level[static_cast<std::size_t>(u)] != -1) continue;
      level[static_cast<std::size_t>(u)] = level[static_cast<std::size_t>(v)] ^ 1;
      frontier.push(u);
    }
  }
  return level;
}

void run_units(int count, int jobs, const std::function<void(int)>& work) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto loop = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int width = std::min(jobs, count);
  pool.reserve(static_cast<std::size_t>(width));
  for (int t = 0; t < width; ++t) pool.emplace_back(loop);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

using ClassMap = std::map<CanonicalCode, DistinguishingGraph>;

// One work unit per ordered type pair (i as white-black, j as white-gray):
// glue every raw map, keep the admissible results, expand signs if asked,
// and dedup locally by canonical code.
std::vector<ClassMap> classify_units(const std::vector<PointGraph>& types, Relation r,
                                     SignMode mode, int jobs) {
  const int m = static_cast<int>(types.size());
  std::vector<PointGraph> gray_side;
  gray_side.reserve(types.size());
  for (const PointGraph& t : types) gray_side.push_back(recolor(t, kSwapBlackGray));

  std::vector<ClassMap> units(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  run_units(m * m, jobs, [&](int unit) {
    int i = unit / m, j = unit % m;
    ClassMap& local = units[static_cast<std::size_t>(unit)];
    for (const GluingMap& gm : enumerate_gluings(types[static_cast<std::size_t>(i)],
                                                 gray_side[static_cast<std::size_t>(j)])) {
      DistinguishingGraph g = glue(types[static_cast<std::size_t>(i)],
                                   gray_side[static_cast<std::size_t>(j)], gm);
      if (!validate_distinguishing(g).ok()) continue;
      if (mode == SignMode::Oriented) {
        local.insert(canonical_pair(g, r));
      } else {
        for (const SignOrbit& orbit : sign_orbits(g))
          local.insert(canonical_pair(with_white_signs(g, orbit.representative), r));
      }
    }
  });
  return units;
}

void require_complexity(int n) {
  if (n < 1) throw std::invalid_argument("complexity must be at least 1");
}

}  // namespace

std::vector<PointGraph> enumerate_point_graphs(int n) {
  require_complexity(n);
  std::map<CanonicalCode, PointGraph> dedup;
  for (const Graph& t : free_trees(2 * n)) {
    std::vector<int> level = bipartition_levels(t);
    int even = static_cast<int>(std::count(level.begin(), level.end(), 0));
    if (even != n) continue;
    for (int white_level : {0, 1}) {
      PointGraph pg;
      pg.n = n;
      pg.other = VertexKind::Black;
      pg.graph = t;
      for (int v = 0; v < t.vertex_count(); ++v)
        pg.graph.kind[static_cast<std::size_t>(v)] =
            level[static_cast<std::size_t>(v)] == white_level ? VertexKind::White : VertexKind::Black;
      dedup.emplace(canonical_tree_code(pg.graph), std::move(pg));
    }
  }
  std::vector<PointGraph> out;
  out.reserve(dedup.size());
  for (auto& [code, pg] : dedup) out.push_back(std::move(pg));
  return out;
}

std::vector<GluingMap> enumerate_gluings(const PointGraph& a, const PointGraph& b) {
  ValidationReport ra = validate_point_graph(a);
  if (!ra.ok()) throw std::invalid_argument("invalid first point graph: " + ra.summary());
  ValidationReport rb = validate_point_graph(b);
  if (!rb.ok()) throw std::invalid_argument("invalid second point graph: " + rb.summary());
  if (a.n != b.n) throw std::invalid_argument("complexity mismatch");

  const std::vector<int> whites_a = a.graph.vertices_of(VertexKind::White);
  const std::vector<int> whites_b = b.graph.vertices_of(VertexKind::White);

  // Degree classes; a white of a may only map to a white of b of equal degree.
  std::map<int, std::vector<int>> class_a, class_b;
  for (int w : whites_a) class_a[a.graph.degree(w)].push_back(w);
  for (int w : whites_b) class_b[b.graph.degree(w)].push_back(w);
  {
    auto ita = class_a.begin();
    auto itb = class_b.begin();
    for (; ita != class_a.end() && itb != class_b.end(); ++ita, ++itb)
      if (ita->first != itb->first || ita->second.size() != itb->second.size()) return {};
    if (ita != class_a.end() || itb != class_b.end()) return {};
  }

  // All white bijections: one permutation per degree class.
  std::vector<std::vector<int>> phis;  // phi indexed like whites_a
  {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    for (auto& [deg, va] : class_a) groups.push_back({va, class_b[deg]});
    std::vector<int> phi(a.graph.kind.size(), -1);
    auto rec = [&](auto&& self, std::size_t gi) -> void {
      if (gi == groups.size()) {
        std::vector<int> flat;
        flat.reserve(whites_a.size());
        for (int w : whites_a) flat.push_back(phi[static_cast<std::size_t>(w)]);
        phis.push_back(std::move(flat));
        return;
      }
      auto& [va, vb] = groups[gi];
      std::vector<int> image = vb;  // ascending start, lexicographic sweep
      do {
        for (std::size_t k = 0; k < va.size(); ++k)
          phi[static_cast<std::size_t>(va[k])] = image[k];
        self(self, gi + 1);
      } while (std::next_permutation(image.begin(), image.end()));
    };
    rec(rec, 0);
  }

  std::vector<GluingMap> out;
  for (const std::vector<int>& phi : phis) {
    // Odometer over one edge permutation per white.
    std::vector<std::vector<int>> perms(whites_a.size());
    for (std::size_t i = 0; i < whites_a.size(); ++i) {
      perms[i].resize(static_cast<std::size_t>(a.graph.degree(whites_a[i])));
      std::iota(perms[i].begin(), perms[i].end(), 0);
    }
    for (;;) {
      GluingMap gm;
      for (std::size_t i = 0; i < whites_a.size(); ++i) {
        gm.white_match.emplace_back(whites_a[i], phi[i]);
        gm.edge_match.push_back(perms[i]);
      }
      out.push_back(std::move(gm));
      std::size_t i = 0;
      while (i < perms.size() && !std::next_permutation(perms[i].begin(), perms[i].end())) ++i;
      if (i == perms.size()) break;
    }
  }
  return out;
}

std::vector<DistinguishingGraph> enumerate_functions(int n, Relation r, SignMode mode, int jobs) {
  require_complexity(n);
  if (r == Relation::LocalIso)
    throw std::invalid_argument("relation must be conjugacy or equivalence");
  const std::vector<PointGraph> types = enumerate_point_graphs(n);
  std::vector<ClassMap> units = classify_units(types, r, mode, jobs);
  ClassMap merged;
  for (auto& unit : units)
    for (auto& [code, g] : unit) merged.emplace(code, std::move(g));
  std::vector<DistinguishingGraph> out;
  out.reserve(merged.size());
  for (auto& [code, g] : merged) out.push_back(std::move(g));
  return out;
}

long long count_classes(int n, Relation r, SignMode mode, int jobs) {
  return static_cast<long long>(enumerate_functions(n, r, mode, jobs).size());
}

long long PairCountMatrix::total() const {
  long long sum = 0;
  for (const auto& row : entries)
    for (int e : row) sum += e;
  return sum;
}

PairCountMatrix pair_count_matrix(int n, int jobs) {
  require_complexity(n);
  const std::vector<PointGraph> types = enumerate_point_graphs(n);
  const int m = static_cast<int>(types.size());
  std::vector<ClassMap> units = classify_units(types, Relation::Conjugacy, SignMode::Oriented, jobs);
  PairCountMatrix out;
  out.entries.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<int>(units[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + j].size());
  out.type_codes.reserve(types.size());
  out.white_degrees.reserve(types.size());
  out.max_degrees.reserve(types.size());
  for (const PointGraph& t : types) {
    out.type_codes.push_back(canonical_tree_code(t.graph));
    std::vector<int> degs;
    int maxdeg = 0;
    for (int v = 0; v < t.graph.vertex_count(); ++v) maxdeg = std::max(maxdeg, t.graph.degree(v));
    for (int w : t.graph.vertices_of(VertexKind::White)) degs.push_back(t.graph.degree(w));
    std::sort(degs.begin(), degs.end());
    out.white_degrees.push_back(std::move(degs));
    out.max_degrees.push_back(maxdeg);
  }
  return out;
}

int PairCountMatrix::path_type() const {
  for (int i = 0; i < size(); ++i)
    if (max_degrees[static_cast<std::size_t>(i)] <= 2) return i;
  return -1;
}

GluingPermutation permutation_encoding(const DistinguishingGraph& d) {
  ValidationReport r = validate_distinguishing(d);
  if (!r.ok()) throw std::invalid_argument("invalid distinguishing graph: " + r.summary());
  const Graph& g = d.graph;
  const int n = d.n;

  // Junction order along the deletion path for `removed`, starting at the
  // degree-1 end colored `start_kind`.
  auto path_order = [&](VertexKind removed, VertexKind start_kind) {
    std::uint64_t kept = g.full_mask() & ~g.mask_of(removed);
    int start = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!((kept >> v) & 1u)) continue;
      int deg = std::popcount(g.adj[static_cast<std::size_t>(v)] & kept);
      if (deg > 2)
        throw std::invalid_argument("constituent point graph is not a path");
      if (deg == 1 && g.kind[static_cast<std::size_t>(v)] == start_kind) start = v;
    }
    if (start < 0) throw std::invalid_argument("constituent point graph is not a path");
    std::vector<int> junctions;
    int prev = -1, cur = start;
    for (;;) {
      if (g.kind[static_cast<std::size_t>(cur)] == VertexKind::Junction) junctions.push_back(cur);
      int next = -1;
      std::uint64_t m = g.adj[static_cast<std::size_t>(cur)] & kept;
      while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        if (u != prev) next = u;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(junctions.size()) != 2 * n - 1)
      throw std::invalid_argument("constituent point graph is not a path");
    return junctions;
  };

  const std::vector<int> wb = path_order(VertexKind::Gray, VertexKind::Black);
  const std::vector<int> wg = path_order(VertexKind::Black, VertexKind::Gray);
  std::vector<int> wg_index(g.kind.size(), 0);
  for (int k = 0; k < static_cast<int>(wg.size()); ++k)
    wg_index[static_cast<std::size_t>(wg[static_cast<std::size_t>(k)])] = k + 1;

  if (wg_index[static_cast<std::size_t>(wb.back())] != 2 * n - 1)
    throw std::logic_error("junction next to the degree-1 white end must be fixed");
  GluingPermutation out;
  for (int k = 0; k + 1 < static_cast<int>(wb.size()); ++k)
    out.perm.push_back(wg_index[static_cast<std::size_t>(wb[static_cast<std::size_t>(k)])]);
  return out;
}

}  // namespace tricrit
