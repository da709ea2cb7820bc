#include "tricrit/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>

#include "tricrit/signs.hpp"

namespace tricrit {

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::LocalIso: return "local";
    case Relation::Conjugacy: return "conjugacy";
    case Relation::Equivalence: return "equivalence";
  }
  return "?";
}

namespace {

constexpr std::uint8_t kFormatVersion = 0x01;

// ---- labeled tree canonical form ------------------------------------------

std::vector<std::uint8_t> rooted_code(const Graph& g, int v, int parent) {
  std::vector<std::vector<std::uint8_t>> child_codes;
  for (int u : g.neighbors(v))
    if (u != parent) child_codes.push_back(rooted_code(g, u, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::vector<std::uint8_t> out;
  out.push_back('(');
  out.push_back(static_cast<std::uint8_t>(g.kind[static_cast<std::size_t>(v)]));
  for (const auto& c : child_codes) out.insert(out.end(), c.begin(), c.end());
  out.push_back(')');
  return out;
}

std::vector<int> tree_centers(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return {0};
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      --remaining;
      for (int u : g.neighbors(v))
        if (--deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
      deg[static_cast<std::size_t>(v)] = 0;
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// ---- partition refinement + backtracking labeling --------------------------

using Cells = std::vector<std::vector<int>>;

Cells initial_partition(const Graph& g) {
  std::vector<std::pair<std::pair<int, int>, int>> keyed;
  keyed.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    keyed.push_back({{static_cast<int>(g.kind[static_cast<std::size_t>(v)]), g.degree(v)}, v});
  std::sort(keyed.begin(), keyed.end());
  Cells cells;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) cells.emplace_back();
    cells.back().push_back(keyed[i].second);
  }
  return cells;
}

// Split cells by neighbor counts against every cell until stable. Signs play
// no role here; they are appended to the encoding after labeling.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint64_t> masks(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) masks[c] |= std::uint64_t{1} << v;
    Cells next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> sig;
        sig.reserve(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c)
          sig.push_back(std::popcount(g.adj[static_cast<std::size_t>(v)] & masks[c]));
        keyed.push_back({std::move(sig), v});
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t run = 0;
      for (std::size_t i = 0; i <= keyed.size(); ++i) {
        if (i == keyed.size() || (i > run && keyed[i].first != keyed[run].first)) {
          next.emplace_back();
          for (std::size_t j = run; j < i; ++j) next.back().push_back(keyed[j].second);
          run = i;
        }
      }
    }
    // A split strictly increases the cell count; equality means stable.
    if (next.size() != cells.size()) changed = true;
    cells = std::move(next);
  }
}

std::vector<std::uint8_t> encode_labeled(const Graph& g, const std::vector<int>& verts,
                                         int polarity) {
  const int n = g.vertex_count();
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>(n));
  for (int p = 0; p < n; ++p)
    out.push_back(static_cast<std::uint8_t>(g.kind[static_cast<std::size_t>(verts[static_cast<std::size_t>(p)])]));
  std::uint8_t acc = 0;
  int nbits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<std::uint8_t>((acc << 1) |
            (g.has_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]) ? 1 : 0));
      if (++nbits == 8) {
        out.push_back(acc);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) out.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
  for (int p = 0; p < n; ++p) {
    int v = verts[static_cast<std::size_t>(p)];
    bool neg = g.kind[static_cast<std::size_t>(v)] == VertexKind::White &&
               polarity * g.sign[static_cast<std::size_t>(v)] < 0;
    out.push_back(neg ? 1 : 0);
  }
  return out;
}

struct Canonizer {
  const Graph& g;
  int polarity;
  bool have = false;
  std::vector<std::uint8_t> best;
  std::vector<int> best_verts;

  Canonizer(const Graph& graph, int pol) : g(graph), polarity(pol) {}

  void consider(const Cells& cells) {
    std::vector<int> verts;
    verts.reserve(cells.size());
    for (const auto& c : cells) verts.push_back(c[0]);
    std::vector<std::uint8_t> code = encode_labeled(g, verts, polarity);
    if (!have || code < best) {
      best = std::move(code);
      best_verts = std::move(verts);
      have = true;
    }
  }

  void search(Cells cells) {
    refine(g, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    }
    if (target == cells.size()) {
      consider(cells);
      return;
    }
    for (int v : cells[target]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }
};

struct LabelingResult {
  std::vector<std::uint8_t> body;
  std::vector<int> verts;  // position -> vertex of the input graph
  int polarity = +1;
};

LabelingResult minimal_labeling(const Graph& g, int polarity) {
  Canonizer c(g, polarity);
  c.search(initial_partition(g));
  return {std::move(c.best), std::move(c.best_verts), polarity};
}

LabelingResult conjugacy_body(const Graph& g) {
  LabelingResult plus = minimal_labeling(g, +1);
  LabelingResult minus = minimal_labeling(g, -1);
  return minus.body < plus.body ? std::move(minus) : std::move(plus);
}

DistinguishingGraph rebuild(const Graph& g, const LabelingResult& lr) {
  const int n = g.vertex_count();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(lr.verts[static_cast<std::size_t>(p)])] = p;
  Graph out;
  out.kind.resize(static_cast<std::size_t>(n));
  out.sign.assign(static_cast<std::size_t>(n), +1);
  out.adj.assign(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) {
    int v = lr.verts[static_cast<std::size_t>(p)];
    out.kind[static_cast<std::size_t>(p)] = g.kind[static_cast<std::size_t>(v)];
    if (g.kind[static_cast<std::size_t>(v)] == VertexKind::White)
      out.sign[static_cast<std::size_t>(p)] = lr.polarity * g.sign[static_cast<std::size_t>(v)];
  }
  for (auto [a, b] : g.edge_list())
    out.add_edge(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
  return as_distinguishing(std::move(out));
}

void require_valid(const DistinguishingGraph& g) {
  ValidationReport r = validate_distinguishing(g);
  if (!r.ok()) throw std::invalid_argument("invalid distinguishing graph: " + r.summary());
}

struct CanonicalPick {
  LabelingResult labeling;
  const Graph* source = nullptr;
};

CanonicalPick pick_canonical(const DistinguishingGraph& g, Relation r,
                             DistinguishingGraph& swapped_storage) {
  if (r != Relation::Conjugacy && r != Relation::Equivalence)
    throw std::invalid_argument("relation must be conjugacy or equivalence");
  require_valid(g);
  CanonicalPick pick{conjugacy_body(g.graph), &g.graph};
  if (r == Relation::Equivalence) {
    swapped_storage = swap_with_signs(g);
    LabelingResult alt = conjugacy_body(swapped_storage.graph);
    if (alt.body < pick.labeling.body) pick = {std::move(alt), &swapped_storage.graph};
  }
  return pick;
}

}  // namespace

CanonicalCode canonical_tree_code(const Graph& tree) {
  if (tree.vertex_count() == 0) throw std::invalid_argument("empty tree");
  std::uint64_t all = tree.full_mask();
  if (!tree.connected_on(all)) throw std::invalid_argument("tree input is disconnected");
  if (!tree.acyclic_on(all)) throw std::invalid_argument("tree input has a cycle");
  CanonicalCode code;
  code.bytes = {kFormatVersion, 'T'};
  std::vector<std::uint8_t> body;
  for (int c : tree_centers(tree)) {
    std::vector<std::uint8_t> candidate = rooted_code(tree, c, -1);
    if (body.empty() || candidate < body) body = std::move(candidate);
  }
  code.bytes.insert(code.bytes.end(), body.begin(), body.end());
  return code;
}

bool are_locally_equivalent(const LocalTree& a, const LocalTree& b) {
  ValidationReport ra = validate_local_tree(a);
  if (!ra.ok()) throw std::invalid_argument("invalid local tree: " + ra.summary());
  ValidationReport rb = validate_local_tree(b);
  if (!rb.ok()) throw std::invalid_argument("invalid local tree: " + rb.summary());
  return canonical_tree_code(a.graph) == canonical_tree_code(b.graph);
}

std::vector<std::vector<int>> automorphisms(const DistinguishingGraph& g) {
  require_valid(g);
  const Graph& gr = g.graph;
  const int n = gr.vertex_count();

  // Refined color classes are preserved by every automorphism.
  Cells cells = initial_partition(gr);
  refine(gr, cells);
  std::vector<int> color(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> classes(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (int v : cells[c]) {
      color[static_cast<std::size_t>(v)] = static_cast<int>(c);
      classes[c].push_back(v);
    }
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (const auto& cls : classes)
    for (int v : cls) order.push_back(v);

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> found;

  auto dfs = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      found.push_back(image);
      return;
    }
    int v = order[idx];
    for (int u : classes[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])]) {
      if (used[static_cast<std::size_t>(u)]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < idx; ++j) {
        int w = order[j];
        if (gr.has_edge(v, w) != gr.has_edge(u, image[static_cast<std::size_t>(w)])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = u;
      used[static_cast<std::size_t>(u)] = true;
      self(self, idx + 1);
      used[static_cast<std::size_t>(u)] = false;
      image[static_cast<std::size_t>(v)] = -1;
    }
  };
  dfs(dfs, 0);
  std::sort(found.begin(), found.end());
  return found;
}

CanonicalCode canonical_code(const DistinguishingGraph& g, Relation r) {
  DistinguishingGraph swapped;
  CanonicalPick pick = pick_canonical(g, r, swapped);
  CanonicalCode code;
  code.bytes = {kFormatVersion, r == Relation::Conjugacy ? std::uint8_t{'C'} : std::uint8_t{'E'}};
  code.bytes.insert(code.bytes.end(), pick.labeling.body.begin(), pick.labeling.body.end());
  return code;
}

DistinguishingGraph canonical_form(const DistinguishingGraph& g, Relation r) {
  DistinguishingGraph swapped;
  CanonicalPick pick = pick_canonical(g, r, swapped);
  return rebuild(*pick.source, pick.labeling);
}

std::pair<CanonicalCode, DistinguishingGraph> canonical_pair(const DistinguishingGraph& g,
                                                             Relation r) {
  DistinguishingGraph swapped;
  CanonicalPick pick = pick_canonical(g, r, swapped);
  CanonicalCode code;
  code.bytes = {kFormatVersion, r == Relation::Conjugacy ? std::uint8_t{'C'} : std::uint8_t{'E'}};
  code.bytes.insert(code.bytes.end(), pick.labeling.body.begin(), pick.labeling.body.end());
  return {std::move(code), rebuild(*pick.source, pick.labeling)};
}

bool are_conjugate(const DistinguishingGraph& a, const DistinguishingGraph& b) {
  return canonical_code(a, Relation::Conjugacy) == canonical_code(b, Relation::Conjugacy);
}

bool are_equivalent(const DistinguishingGraph& a, const DistinguishingGraph& b) {
  return canonical_code(a, Relation::Equivalence) == canonical_code(b, Relation::Equivalence);
}

}  // namespace tricrit
