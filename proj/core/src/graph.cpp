#include "tricrit/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace tricrit {

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Region: return "region";
    case VertexKind::White: return "white";
    case VertexKind::Black: return "black";
    case VertexKind::Gray: return "gray";
    case VertexKind::Junction: return "t";
  }
  return "?";
}

bool is_colored(VertexKind k) {
  return k == VertexKind::White || k == VertexKind::Black || k == VertexKind::Gray;
}

int Graph::add_vertex(VertexKind k, Sign s) {
  if (vertex_count() >= kMaxVertices)
    throw std::invalid_argument("graph exceeds 64 vertices");
  kind.push_back(k);
  sign.push_back(s);
  adj.push_back(0);
  return vertex_count() - 1;
}

void Graph::add_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("self loop");
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
  adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
}

int Graph::degree(int v) const {
  return std::popcount(adj[static_cast<std::size_t>(v)]);
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  std::uint64_t m = adj[static_cast<std::size_t>(v)];
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < vertex_count(); ++a) {
    std::uint64_t m = adj[static_cast<std::size_t>(a)] >> (a + 1) << (a + 1);
    while (m) {
      out.emplace_back(a, std::countr_zero(m));
      m &= m - 1;
    }
  }
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < vertex_count(); ++v) twice += degree(v);
  return twice / 2;
}

std::vector<int> Graph::vertices_of(VertexKind k) const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (kind[static_cast<std::size_t>(v)] == k) out.push_back(v);
  return out;
}

int Graph::count_of(VertexKind k) const {
  return static_cast<int>(std::count(kind.begin(), kind.end(), k));
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  const int n = vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabeling size mismatch");
  std::vector<bool> hit(perm.size(), false);
  for (int v = 0; v < n; ++v) {
    if (perm[static_cast<std::size_t>(v)] < 0 || perm[static_cast<std::size_t>(v)] >= n ||
        hit[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])])
      throw std::invalid_argument("relabeling is not a permutation");
    hit[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = true;
  }
  Graph out;
  out.kind.resize(perm.size());
  out.sign.resize(perm.size());
  out.adj.assign(perm.size(), 0);
  for (int v = 0; v < n; ++v) {
    out.kind[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = kind[static_cast<std::size_t>(v)];
    out.sign[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = sign[static_cast<std::size_t>(v)];
  }
  for (auto [a, b] : edge_list())
    out.add_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  return out;
}

std::uint64_t Graph::full_mask() const {
  const int n = vertex_count();
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t Graph::mask_of(VertexKind k) const {
  std::uint64_t m = 0;
  for (int v = 0; v < vertex_count(); ++v)
    if (kind[static_cast<std::size_t>(v)] == k) m |= std::uint64_t{1} << v;
  return m;
}

int Graph::components_on(std::uint64_t mask) const {
  std::uint64_t left = mask;
  int components = 0;
  while (left) {
    ++components;
    std::uint64_t comp = left & -left;
    for (;;) {
      std::uint64_t grown = comp;
      std::uint64_t m = comp;
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        grown |= adj[static_cast<std::size_t>(v)] & mask;
      }
      if (grown == comp) break;
      comp = grown;
    }
    left &= ~comp;
  }
  return components;
}

int Graph::edges_on(std::uint64_t mask) const {
  int twice = 0;
  std::uint64_t m = mask;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    twice += std::popcount(adj[static_cast<std::size_t>(v)] & mask);
  }
  return twice / 2;
}

bool Graph::connected_on(std::uint64_t mask) const {
  return components_on(mask) <= 1;
}

bool Graph::acyclic_on(std::uint64_t mask) const {
  return edges_on(mask) == std::popcount(mask) - components_on(mask);
}

void ValidationReport::add(std::string rule, std::string detail, std::vector<int> where) {
  violations.push_back({std::move(rule), std::move(detail), std::move(where)});
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].rule << ": " << violations[i].detail;
  }
  return os.str();
}

LocalTree tree_from_arrangement(const CircleArrangement& a) {
  const int k = a.circle_count();
  // Forest check: parents in range, no cycles along parent chains.
  for (int i = 0; i < k; ++i) {
    int steps = 0;
    for (int c = i; c != -1; c = a.parent[static_cast<std::size_t>(c)]) {
      if (c < -1 || c >= k) throw std::invalid_argument("circle parent out of range");
      if (++steps > k) throw std::invalid_argument("circle nesting has a cycle");
    }
  }
  LocalTree t;
  t.graph.kind.assign(static_cast<std::size_t>(k) + 1, VertexKind::Region);
  t.graph.sign.assign(static_cast<std::size_t>(k) + 1, +1);
  t.graph.adj.assign(static_cast<std::size_t>(k) + 1, 0);
  // Vertex 0 is the base region; circle i separates it (or the region inside
  // its parent) from the region just inside circle i, which is vertex i+1.
  for (int i = 0; i < k; ++i) {
    int p = a.parent[static_cast<std::size_t>(i)];
    t.graph.add_edge(p == -1 ? 0 : p + 1, i + 1);
  }
  return t;
}

namespace {

void check_connected_acyclic(const Graph& g, ValidationReport& r) {
  std::uint64_t all = g.full_mask();
  if (!g.connected_on(all)) r.add("connected", "graph is not connected");
  if (!g.acyclic_on(all)) r.add("acyclic", "graph contains a cycle");
}

}  // namespace

ValidationReport validate_local_tree(const LocalTree& t) {
  ValidationReport r;
  if (t.graph.vertex_count() == 0) {
    r.add("nonempty", "local tree has no vertices");
    return r;
  }
  for (int v = 0; v < t.graph.vertex_count(); ++v)
    if (t.graph.kind[static_cast<std::size_t>(v)] != VertexKind::Region)
      r.add("kind", std::string("vertex is ") + kind_name(t.graph.kind[static_cast<std::size_t>(v)]) +
                        ", expected region", {v});
  check_connected_acyclic(t.graph, r);
  return r;
}

ValidationReport validate_point_graph(const PointGraph& g) {
  ValidationReport r;
  if (g.graph.vertex_count() == 0) {
    r.add("nonempty", "point graph has no vertices");
    return r;
  }
  if (g.other != VertexKind::Black && g.other != VertexKind::Gray)
    r.add("kind", "second color class must be black or gray");
  for (int v = 0; v < g.graph.vertex_count(); ++v) {
    VertexKind k = g.graph.kind[static_cast<std::size_t>(v)];
    if (k != VertexKind::White && k != g.other)
      r.add("kind", std::string("vertex is ") + kind_name(k), {v});
  }
  check_connected_acyclic(g.graph, r);
  for (auto [a, b] : g.graph.edge_list()) {
    bool aw = g.graph.kind[static_cast<std::size_t>(a)] == VertexKind::White;
    bool bw = g.graph.kind[static_cast<std::size_t>(b)] == VertexKind::White;
    if (aw == bw) r.add("proper-coloring", "edge joins two vertices of one class", {a, b});
  }
  int white = g.graph.count_of(VertexKind::White);
  int other = g.graph.vertex_count() - white;
  if (white != other)
    r.add("color-counts", "classes have " + std::to_string(white) + " and " +
                              std::to_string(other) + " vertices");
  if (white != g.n || white == 0)
    r.add("color-counts", "expected n=" + std::to_string(g.n) + " vertices per class");
  return r;
}

ValidationReport validate_distinguishing(const DistinguishingGraph& d) {
  ValidationReport r;
  const Graph& g = d.graph;
  if (g.vertex_count() == 0) {
    r.add("nonempty", "graph has no vertices");
    return r;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.kind[static_cast<std::size_t>(v)] == VertexKind::Region)
      r.add("kind", "region vertex in a distinguishing graph", {v});
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.sign[static_cast<std::size_t>(v)] != +1 && g.sign[static_cast<std::size_t>(v)] != -1)
      r.add("sign-values", "sign must be +1 or -1", {v});

  const int white = g.count_of(VertexKind::White);
  const int black = g.count_of(VertexKind::Black);
  const int gray = g.count_of(VertexKind::Gray);
  const int junctions = g.count_of(VertexKind::Junction);
  if (white != black || black != gray)
    r.add("color-counts", "color classes have sizes " + std::to_string(white) + "/" +
                              std::to_string(black) + "/" + std::to_string(gray));
  const int n = d.n;
  if (n < 1) r.add("n-positive", "complexity must be at least 1");
  if (white != n)
    r.add("color-counts", "expected n=" + std::to_string(n) + " white vertices, found " +
                              std::to_string(white));

  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.kind[static_cast<std::size_t>(v)] != VertexKind::Junction) continue;
    if (g.degree(v) != 3) {
      r.add("junction-degree", "junction has degree " + std::to_string(g.degree(v)), {v});
      continue;
    }
    int w = 0, b = 0, gr = 0;
    for (int u : g.neighbors(v)) {
      switch (g.kind[static_cast<std::size_t>(u)]) {
        case VertexKind::White: ++w; break;
        case VertexKind::Black: ++b; break;
        case VertexKind::Gray: ++gr; break;
        default: break;
      }
    }
    if (w != 1 || b != 1 || gr != 1)
      r.add("junction-colors", "junction neighbors are not one of each color", {v});
  }

  for (auto [a, b2] : g.edge_list()) {
    bool aj = g.kind[static_cast<std::size_t>(a)] == VertexKind::Junction;
    bool bj = g.kind[static_cast<std::size_t>(b2)] == VertexKind::Junction;
    if (aj == bj) r.add("edge-endpoints", "edge must join a colored vertex to a junction", {a, b2});
  }

  if (!g.connected_on(g.full_mask())) r.add("connected", "graph is not connected");

  for (VertexKind k : {VertexKind::White, VertexKind::Black, VertexKind::Gray}) {
    std::uint64_t kept = g.full_mask() & ~g.mask_of(k);
    std::string name = kind_name(k);
    if (!g.acyclic_on(kept))
      r.add("deletion-" + name + "-acyclic", "deleting " + name + " leaves a cycle");
    if (!g.connected_on(kept))
      r.add("deletion-" + name + "-connected", "deleting " + name + " disconnects the graph");
  }

  if (junctions != 2 * n - 1)
    r.add("junction-count", "expected " + std::to_string(2 * n - 1) + " junctions, found " +
                                std::to_string(junctions));
  if (g.edge_count() != 6 * n - 3)
    r.add("edge-count", "expected " + std::to_string(6 * n - 3) + " edges, found " +
                            std::to_string(g.edge_count()));
  int rank = g.edge_count() - g.vertex_count() + g.components_on(g.full_mask());
  if (rank != n - 1)
    r.add("cycle-rank", "expected cycle rank " + std::to_string(n - 1) + ", found " +
                            std::to_string(rank));
  return r;
}

SubdividedPointGraph subdivide(const PointGraph& g) {
  ValidationReport r = validate_point_graph(g);
  if (!r.ok()) throw std::invalid_argument("invalid point graph: " + r.summary());
  SubdividedPointGraph out;
  out.n = g.n;
  out.other = g.other;
  out.graph.kind = g.graph.kind;
  out.graph.sign = g.graph.sign;
  out.graph.adj.assign(g.graph.kind.size(), 0);
  for (auto [a, b] : g.graph.edge_list()) {
    int t = out.graph.add_vertex(VertexKind::Junction);
    out.graph.add_edge(a, t);
    out.graph.add_edge(t, b);
  }
  return out;
}

DistinguishingGraph glue(const PointGraph& a, const PointGraph& b, const GluingMap& m) {
  ValidationReport ra = validate_point_graph(a);
  if (!ra.ok()) throw std::invalid_argument("invalid first point graph: " + ra.summary());
  ValidationReport rb = validate_point_graph(b);
  if (!rb.ok()) throw std::invalid_argument("invalid second point graph: " + rb.summary());
  if (a.other != VertexKind::Black) throw std::invalid_argument("first graph must be white-black");
  if (b.other != VertexKind::Gray) throw std::invalid_argument("second graph must be white-gray");
  if (a.n != b.n) throw std::invalid_argument("complexity mismatch");
  const int n = a.n;

  const std::vector<int> whites_a = a.graph.vertices_of(VertexKind::White);
  const std::vector<int> whites_b = b.graph.vertices_of(VertexKind::White);
  if (static_cast<int>(m.white_match.size()) != n || static_cast<int>(m.edge_match.size()) != n)
    throw std::invalid_argument("gluing map has wrong size");

  std::vector<int> phi(a.graph.kind.size(), -1);   // white of a -> white of b
  std::vector<bool> used_b(b.graph.kind.size(), false);
  for (int i = 0; i < n; ++i) {
    auto [wa, wb] = m.white_match[static_cast<std::size_t>(i)];
    if (wa != whites_a[static_cast<std::size_t>(i)])
      throw std::invalid_argument("white_match must list whites of a in ascending order");
    if (wb < 0 || wb >= b.graph.vertex_count() ||
        b.graph.kind[static_cast<std::size_t>(wb)] != VertexKind::White || used_b[static_cast<std::size_t>(wb)])
      throw std::invalid_argument("white_match is not a bijection onto whites of b");
    used_b[static_cast<std::size_t>(wb)] = true;
    if (a.graph.degree(wa) != b.graph.degree(wb))
      throw std::invalid_argument("white_match pairs vertices of unequal degree");
    phi[static_cast<std::size_t>(wa)] = wb;
    const auto& p = m.edge_match[static_cast<std::size_t>(i)];
    if (static_cast<int>(p.size()) != a.graph.degree(wa))
      throw std::invalid_argument("edge_match has wrong arity");
    std::vector<bool> hit(p.size(), false);
    for (int x : p) {
      if (x < 0 || x >= static_cast<int>(p.size()) || hit[static_cast<std::size_t>(x)])
        throw std::invalid_argument("edge_match entry is not a permutation");
      hit[static_cast<std::size_t>(x)] = true;
    }
  }

  // Layout: whites (order of whites_a), blacks of a, grays of b, junctions in
  // the order of a's edges grouped by white.
  DistinguishingGraph out;
  out.n = n;
  Graph& g = out.graph;
  std::vector<int> new_white(a.graph.kind.size(), -1);
  std::vector<int> new_black(a.graph.kind.size(), -1);
  std::vector<int> new_gray(b.graph.kind.size(), -1);
  for (int w : whites_a) new_white[static_cast<std::size_t>(w)] = g.add_vertex(VertexKind::White);
  for (int v : a.graph.vertices_of(VertexKind::Black))
    new_black[static_cast<std::size_t>(v)] = g.add_vertex(VertexKind::Black);
  for (int v : b.graph.vertices_of(VertexKind::Gray))
    new_gray[static_cast<std::size_t>(v)] = g.add_vertex(VertexKind::Gray);

  for (int i = 0; i < n; ++i) {
    int wa = whites_a[static_cast<std::size_t>(i)];
    int wb = phi[static_cast<std::size_t>(wa)];
    const std::vector<int> nb_a = a.graph.neighbors(wa);
    const std::vector<int> nb_b = b.graph.neighbors(wb);
    const auto& p = m.edge_match[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < nb_a.size(); ++k) {
      int t = g.add_vertex(VertexKind::Junction);
      g.add_edge(new_white[static_cast<std::size_t>(wa)], t);
      g.add_edge(new_black[static_cast<std::size_t>(nb_a[k])], t);
      g.add_edge(new_gray[static_cast<std::size_t>(nb_b[static_cast<std::size_t>(p[k])])], t);
    }
  }
  return out;
}

namespace {

VertexKind apply_color(const ColorPermutation& p, VertexKind k) {
  switch (k) {
    case VertexKind::White: return p.white_to;
    case VertexKind::Black: return p.black_to;
    case VertexKind::Gray: return p.gray_to;
    default: return k;
  }
}

void check_color_permutation(const ColorPermutation& p) {
  auto colored = [](VertexKind k) { return is_colored(k); };
  if (!colored(p.white_to) || !colored(p.black_to) || !colored(p.gray_to) ||
      p.white_to == p.black_to || p.black_to == p.gray_to || p.white_to == p.gray_to)
    throw std::invalid_argument("not a permutation of the three colors");
}

Graph recolor_raw(const Graph& g, const ColorPermutation& p, bool discard_signs) {
  check_color_permutation(p);
  if (!discard_signs) {
    Sign first = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.kind[static_cast<std::size_t>(v)] != VertexKind::White) continue;
      if (first == 0) first = g.sign[static_cast<std::size_t>(v)];
      if (g.sign[static_cast<std::size_t>(v)] != first)
        throw std::invalid_argument("recoloring a graph with mixed signs requires discarding them");
    }
  }
  Graph out = g;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.kind[static_cast<std::size_t>(v)] = apply_color(p, g.kind[static_cast<std::size_t>(v)]);
    out.sign[static_cast<std::size_t>(v)] = +1;
  }
  return out;
}

}  // namespace

PointGraph recolor(const PointGraph& g, const ColorPermutation& p, bool discard_signs) {
  PointGraph out;
  out.graph = recolor_raw(g.graph, p, discard_signs);
  out.n = g.n;
  if (out.graph.count_of(VertexKind::White) == 0)
    throw std::invalid_argument("recoloring removed the white class from a point graph");
  out.other = out.graph.count_of(VertexKind::Gray) > 0 ? VertexKind::Gray : VertexKind::Black;
  return out;
}

DistinguishingGraph recolor(const DistinguishingGraph& g, const ColorPermutation& p, bool discard_signs) {
  DistinguishingGraph out;
  out.graph = recolor_raw(g.graph, p, discard_signs);
  out.n = g.n;
  return out;
}

PointGraph as_point_graph(Graph g) {
  PointGraph out;
  out.n = g.count_of(VertexKind::White);
  out.other = g.count_of(VertexKind::Gray) > 0 ? VertexKind::Gray : VertexKind::Black;
  out.graph = std::move(g);
  return out;
}

DistinguishingGraph as_distinguishing(Graph g) {
  DistinguishingGraph out;
  out.n = g.count_of(VertexKind::White);
  out.graph = std::move(g);
  return out;
}

}  // namespace tricrit
