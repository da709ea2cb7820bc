#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tricrit {

/// Vertex roles. Region vertices appear only in local trees; the colored
/// kinds and Junction appear in point graphs and distinguishing graphs.
enum class VertexKind : std::uint8_t {
  Region = 0,
  White = 1,
  Black = 2,
  Gray = 3,
  Junction = 4,
};

const char* kind_name(VertexKind k);
bool is_colored(VertexKind k);

/// Orientation number carried by a white vertex; exactly +1 or -1.
using Sign = int;

/// Undirected simple graph with a kind and a sign per vertex. Adjacency is a
/// bitset row per vertex, which caps instances at 64 vertices; everything in
/// this library has at most 5n-1 <= 29 vertices for complexity n <= 6.
struct Graph {
  static constexpr int kMaxVertices = 64;

  std::vector<VertexKind> kind;
  std::vector<Sign> sign;  // meaningful on White vertices only, +1 elsewhere
  std::vector<std::uint64_t> adj;

  int vertex_count() const { return static_cast<int>(kind.size()); }
  int add_vertex(VertexKind k, Sign s = +1);
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const {
    return (adj[static_cast<std::size_t>(a)] >> b) & 1u;
  }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;             // ascending
  std::vector<std::pair<int, int>> edge_list() const;  // (a, b) with a < b, sorted
  int edge_count() const;
  std::vector<int> vertices_of(VertexKind k) const;
  int count_of(VertexKind k) const;

  /// Copy with vertex v renamed to perm[v]; kinds and signs travel along.
  Graph relabeled(const std::vector<int>& perm) const;

  std::uint64_t full_mask() const;
  std::uint64_t mask_of(VertexKind k) const;

  // Subgraph queries on a vertex mask, used for the color-deletion checks.
  int components_on(std::uint64_t mask) const;
  int edges_on(std::uint64_t mask) const;
  bool connected_on(std::uint64_t mask) const;
  bool acyclic_on(std::uint64_t mask) const;

  bool operator==(const Graph&) const = default;
};

struct Violation {
  std::string rule;
  std::string detail;
  std::vector<int> where;
};

/// Outcome of a validator; ok() holds exactly when no rule was violated.
struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::string detail, std::vector<int> where = {});
  std::string summary() const;
};

/// Nesting forest of disjoint circles on a sphere. parent[i] is the circle
/// immediately enclosing circle i, or -1 when circle i lies in the base
/// region. Which region is "base" is a drawing choice; the tree built from
/// the arrangement forgets it.
struct CircleArrangement {
  std::vector<int> parent;
  int circle_count() const { return static_cast<int>(parent.size()); }
};

/// Tree of the complementary regions of a circle arrangement: one Region
/// vertex per region, one edge per circle.
struct LocalTree {
  Graph graph;
};

/// Bicolored tree with n White vertices and n vertices of one other color
/// (Black or Gray), every edge joining the two classes.
struct PointGraph {
  Graph graph;
  int n = 0;
  VertexKind other = VertexKind::Black;
};

/// Point graph with every original edge split by a degree-2 Junction vertex.
struct SubdividedPointGraph {
  Graph graph;
  int n = 0;
  VertexKind other = VertexKind::Black;
};

/// Glued graph on White/Black/Gray/Junction vertices with orientation
/// numbers on the white vertices; n is the count of each color class.
struct DistinguishingGraph {
  Graph graph;
  int n = 0;
};

/// Pairing of the white vertices of a white-black point graph with the white
/// vertices of a white-gray point graph, plus a bijection of incident edges
/// at every matched pair.
struct GluingMap {
  /// (white of a, white of b), whites of a in ascending order.
  std::vector<std::pair<int, int>> white_match;
  /// One permutation per matched white, same order as white_match: edge
  /// (w, nbrs_a(w)[k]) is glued to (phi(w), nbrs_b(phi(w))[edge_match[i][k]]),
  /// neighbor lists ascending.
  std::vector<std::vector<int>> edge_match;
};

/// Permutation of the three color kinds; Junction and Region never move.
struct ColorPermutation {
  VertexKind white_to = VertexKind::White;
  VertexKind black_to = VertexKind::Black;
  VertexKind gray_to = VertexKind::Gray;
};

inline constexpr ColorPermutation kSwapWhiteBlack{VertexKind::Black, VertexKind::White, VertexKind::Gray};
inline constexpr ColorPermutation kSwapBlackGray{VertexKind::White, VertexKind::Gray, VertexKind::Black};
inline constexpr ColorPermutation kSwapWhiteGray{VertexKind::Gray, VertexKind::Black, VertexKind::White};

/// Tree of the regions a circle arrangement cuts out of the sphere: k circles
/// give k edges and k+1 Region vertices. Throws std::invalid_argument if the
/// parent links do not form a forest.
LocalTree tree_from_arrangement(const CircleArrangement& a);

ValidationReport validate_local_tree(const LocalTree& t);
ValidationReport validate_point_graph(const PointGraph& g);
ValidationReport validate_distinguishing(const DistinguishingGraph& g);

/// Splits every edge with a fresh Junction vertex. Throws on invalid input.
SubdividedPointGraph subdivide(const PointGraph& g);

/// Glues the subdivisions of a white-black and a white-gray point graph along
/// matched whites and matched edge midpoints. Every junction of the result
/// has one neighbor of each color; all white signs start at +1. The result is
/// NOT guaranteed to satisfy the black-gray tree condition; run
/// validate_distinguishing to decide admissibility.
DistinguishingGraph glue(const PointGraph& a, const PointGraph& b, const GluingMap& m);

/// Raw recoloring. Without discard_signs the white signs must be uniform
/// (they are reset to +1 on the new white class); with discard_signs any
/// signs are dropped. Throws on mixed signs without the flag.
PointGraph recolor(const PointGraph& g, const ColorPermutation& p, bool discard_signs = false);
DistinguishingGraph recolor(const DistinguishingGraph& g, const ColorPermutation& p, bool discard_signs = false);

/// Wrap a raw graph, deriving n (and the non-white color for point graphs).
/// No validation beyond what the derivation needs.
PointGraph as_point_graph(Graph g);
DistinguishingGraph as_distinguishing(Graph g);

}  // namespace tricrit
