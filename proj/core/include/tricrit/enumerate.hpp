#pragma once

#include <utility>
#include <vector>

#include "tricrit/canon.hpp"
#include "tricrit/graph.hpp"

namespace tricrit {

enum class SignMode { Oriented, All };
const char* sign_mode_name(SignMode m);

/// All white-black point graphs of complexity n, one per color-preserving
/// isomorphism class, sorted by canonical tree code. Throws for n < 1.
std::vector<PointGraph> enumerate_point_graphs(int n);

/// Every degree-preserving white bijection combined with every family of
/// incident-edge bijections, in a fixed deterministic order, no dedup.
/// b is taken as the white-gray side regardless of its stored color.
std::vector<GluingMap> enumerate_gluings(const PointGraph& a, const PointGraph& b);

/// All classes of distinguishing graphs of complexity n under r, one
/// canonical representative each, sorted by canonical code. Oriented mode
/// keeps the all-+1 signs produced by gluing; All expands every admissible
/// gluing by its sign-orbit representatives before dedup. jobs > 1 fans the
/// type-pair work units over threads; results are identical either way.
std::vector<DistinguishingGraph> enumerate_functions(int n, Relation r, SignMode mode,
                                                     int jobs = 1);

long long count_classes(int n, Relation r, SignMode mode, int jobs = 1);

/// Symmetric matrix whose (i, j) entry counts the conjugacy classes arising
/// from gluing a type-i white-black graph with a type-j white-gray graph.
struct PairCountMatrix {
  std::vector<std::vector<int>> entries;
  std::vector<CanonicalCode> type_codes;        // matrix index -> point-graph code
  std::vector<std::vector<int>> white_degrees;  // matrix index -> sorted white degrees
  std::vector<int> max_degrees;                 // matrix index -> max vertex degree
  int size() const { return static_cast<int>(entries.size()); }
  long long total() const;
  /// Index of the type whose underlying tree is a path, -1 if absent.
  int path_type() const;
};
PairCountMatrix pair_count_matrix(int n, int jobs = 1);

/// Junction matching of a graph glued from two path point graphs, read as a
/// permutation: junctions are numbered 1..2n-1 along the white-black path
/// starting at the degree-1 black end, and along the white-gray path starting
/// at the degree-1 gray end. Index 2n-1 is always fixed, so the permutation
/// acts on 1..2n-2. Throws when either constituent is not a path.
struct GluingPermutation {
  std::vector<int> perm;  // perm[k] = image of k+1
};
GluingPermutation permutation_encoding(const DistinguishingGraph& g);

}  // namespace tricrit
