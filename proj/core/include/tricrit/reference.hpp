#pragma once

#include <array>
#include <vector>

#include "tricrit/enumerate.hpp"

namespace tricrit {

// Published reference values the enumerator is expected to reproduce,
// indexed by complexity n = 1..4 where arrays are used.

inline constexpr std::array<long long, 4> kReferencePointGraphCounts = {1, 1, 4, 14};
inline constexpr std::array<long long, 4> kReferenceConjugacyOriented = {1, 1, 9, 179};
inline constexpr std::array<long long, 4> kReferenceEquivalenceOriented = {1, 1, 6, 93};
inline constexpr long long kReferenceEquivalenceAllN3 = 16;
inline constexpr long long kReferenceConjugacyAllN3 = 24;
inline constexpr std::array<int, 6> kReferenceSignOrbitMultisetN3 = {2, 2, 3, 3, 3, 3};
inline constexpr int kReferencePathPathCell = 20;

/// Transcription of the published 14x14 table of admissible gluing-pair
/// counts. Known to be incomplete: it sums to 171 while the computed matrix
/// (and the published total) is 179. The gaps are reported, never patched.
const std::vector<std::vector<int>>& reference_pair_counts();

/// The published 20 junction permutations for path-path gluings at n = 4.
const std::vector<std::vector<int>>& reference_path_permutations();

struct CellDiff {
  int row = 0;  // 1-based, reference coordinates
  int col = 0;
  int reference = 0;
  int computed = 0;
};

/// Cell-by-cell comparison of a computed 14x14 matrix against the reference
/// transcription, after the simultaneous row/column alignment that matches
/// the most nonzero reference cells. Alignment candidates are constrained to
/// map equal diagonal values onto each other.
struct TableDiff {
  bool aligned = false;
  std::vector<int> alignment;  // reference index -> computed index
  int nonzero_reference = 0;
  int matched = 0;
  std::vector<CellDiff> mismatched;     // reference nonzero, computed differs
  std::vector<CellDiff> missing_cells;  // computed nonzero where reference has none
};
TableDiff diff_against_reference(const PairCountMatrix& computed);

}  // namespace tricrit
