#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tricrit/graph.hpp"

namespace tricrit {

/// Relabeling-invariant byte string with total lexicographic order. Equal
/// codes hold exactly for graphs related under the relation the code was
/// computed for. The leading byte is the format version, the second byte
/// tags the relation, so stored codes stay comparable across releases.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalCode&) const = default;
  std::string hex() const;
};

enum class Relation { LocalIso, Conjugacy, Equivalence };
const char* relation_name(Relation r);

/// Canonical form of a tree with per-vertex kind labels: rooted at the
/// center(s), children encodings sorted, minimum over the two centers.
/// Throws on cyclic or disconnected input.
CanonicalCode canonical_tree_code(const Graph& tree);

/// Local invariant comparison: the two region trees are isomorphic.
bool are_locally_equivalent(const LocalTree& a, const LocalTree& b);

/// All kind-preserving automorphisms (signs ignored) as explicit permutation
/// vectors perm[v] = image, sorted lexicographically.
std::vector<std::vector<int>> automorphisms(const DistinguishingGraph& g);

/// Canonical code of a valid distinguishing graph. Conjugacy minimizes over
/// kind-preserving labelings and the two global sign polarities; Equivalence
/// additionally minimizes over the white/black color swap with propagated
/// sign transport. r must be Conjugacy or Equivalence.
CanonicalCode canonical_code(const DistinguishingGraph& g, Relation r);

/// The canonically relabeled representative realizing canonical_code(g, r).
/// A pure function of the equivalence class of g.
DistinguishingGraph canonical_form(const DistinguishingGraph& g, Relation r);

/// Code and canonical representative from a single labeling search.
std::pair<CanonicalCode, DistinguishingGraph> canonical_pair(const DistinguishingGraph& g,
                                                             Relation r);

bool are_conjugate(const DistinguishingGraph& a, const DistinguishingGraph& b);
bool are_equivalent(const DistinguishingGraph& a, const DistinguishingGraph& b);

}  // namespace tricrit
