#include "tricrit/reference.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tricrit {

const std::vector<std::vector<int>>& reference_pair_counts() {
  static const std::vector<std::vector<int>> table = {
      // 1   2   3   4   5   6   7   8   9  10  11  12  13  14
      {20, 12,  0,  0,  0,  0,  0,  7,  0,  0,  0,  0,  1,  0},  // 1
      {12,  8,  0,  0,  0,  0,  0,  5,  0,  0,  0,  0,  1,  0},  // 2
      { 0,  0,  2,  1,  1,  8,  3,  0,  6,  0,  0,  1,  0,  0},  // 3
      { 0,  0,  1,  0,  0,  1,  2,  0,  3,  0,  0,  0,  0,  0},  // 4
      { 0,  0,  1,  0,  0,  1,  0,  0,  3,  0,  0,  0,  0,  0},  // 5
      { 0,  0,  8,  1,  1,  4,  2,  0,  1,  0,  0,  1,  0,  0},  // 6
      { 0,  0,  3,  2,  0,  2,  0,  0,  0,  0,  0,  0,  0,  0},  // 7
      { 7,  5,  0,  0,  0,  0,  0,  4,  0,  0,  0,  0,  1,  0},  // 8
      { 0,  0,  6,  3,  3,  1,  0,  0,  1,  0,  0,  1,  0,  0},  // 9
      { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  2,  0,  0,  0},  // 10
      { 0,  0,  0,  0,  0,  0,  0,  0,  0,  2,  1,  0,  0,  1},  // 11
      { 0,  0,  1,  0,  0,  1,  0,  0,  1,  0,  0,  0,  0,  0},  // 12
      { 1,  1,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  1,  0},  // 13
      { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0},  // 14
  };
  return table;
}

const std::vector<std::vector<int>>& reference_path_permutations() {
  static const std::vector<std::vector<int>> perms = {
      {5, 6, 3, 4, 2, 1}, {4, 3, 6, 5, 2, 1}, {3, 4, 6, 5, 2, 1}, {4, 3, 5, 6, 2, 1},
      {5, 6, 4, 3, 1, 2}, {2, 1, 5, 6, 4, 3}, {6, 5, 2, 1, 4, 3}, {6, 5, 1, 2, 4, 3},
      {5, 6, 1, 2, 4, 3}, {6, 5, 2, 1, 3, 4}, {5, 6, 2, 1, 3, 4}, {2, 1, 6, 5, 3, 4},
      {2, 1, 5, 6, 3, 4}, {2, 1, 4, 3, 6, 5}, {3, 4, 2, 1, 6, 5}, {4, 3, 1, 2, 6, 5},
      {3, 4, 1, 2, 6, 5}, {6, 5, 3, 4, 1, 2}, {3, 4, 6, 5, 1, 2}, {4, 3, 5, 6, 1, 2},
  };
  return perms;
}

TableDiff diff_against_reference(const PairCountMatrix& computed) {
  const auto& ref = reference_pair_counts();
  const int m = static_cast<int>(ref.size());
  if (computed.size() != m)
    throw std::invalid_argument("reference comparison needs a 14x14 matrix (complexity 4)");

  TableDiff diff;
  for (const auto& row : ref)
    for (int cell : row)
      if (cell != 0) ++diff.nonzero_reference;

  // A cell can be nonzero only when the two types have equal white-degree
  // multisets, so types fall into blocks that must align with each other and
  // can be optimized independently. The reference blocks are read off the
  // zero pattern of the transcription; blocks are matched by size (4, 7, 3,
  // all distinct).
  static const std::vector<std::vector<int>> ref_blocks = {
      {0, 1, 7, 12}, {2, 3, 4, 5, 6, 8, 11}, {9, 10, 13}};
  std::map<std::vector<int>, std::vector<int>> comp_groups;
  for (int i = 0; i < m; ++i)
    comp_groups[computed.white_degrees[static_cast<std::size_t>(i)]].push_back(i);
  std::map<std::size_t, std::vector<int>> comp_by_size;
  for (auto& [profile, members] : comp_groups) {
    if (comp_by_size.count(members.size())) return diff;  // ambiguous block sizes
    comp_by_size[members.size()] = members;
  }

  std::vector<int> alignment(static_cast<std::size_t>(m), -1);
  int total_matched = 0;
  for (const auto& refs : ref_blocks) {
    auto it = comp_by_size.find(refs.size());
    if (it == comp_by_size.end()) return diff;
    // Cells pairing this block with other blocks are all zero, so the score
    // of a block alignment is local to the block.
    std::vector<int> image = it->second;
    std::sort(image.begin(), image.end());
    std::vector<int> best;
    int best_matched = -1;
    do {
      int matched = 0;
      for (std::size_t a = 0; a < refs.size(); ++a)
        for (std::size_t b = 0; b < refs.size(); ++b) {
          int r = ref[static_cast<std::size_t>(refs[a])][static_cast<std::size_t>(refs[b])];
          if (r != 0 &&
              computed.entries[static_cast<std::size_t>(image[a])][static_cast<std::size_t>(image[b])] == r)
            ++matched;
        }
      if (matched > best_matched) {
        best_matched = matched;
        best = image;
      }
    } while (std::next_permutation(image.begin(), image.end()));
    for (std::size_t a = 0; a < refs.size(); ++a)
      alignment[static_cast<std::size_t>(refs[a])] = best[a];
    total_matched += best_matched;
  }

  diff.aligned = true;
  diff.alignment = alignment;
  diff.matched = total_matched;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int r = ref[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      int c = computed.entries[static_cast<std::size_t>(alignment[static_cast<std::size_t>(i)])]
                              [static_cast<std::size_t>(alignment[static_cast<std::size_t>(j)])];
      if (r != 0 && c != r) diff.mismatched.push_back({i + 1, j + 1, r, c});
      if (r == 0 && c != 0) diff.missing_cells.push_back({i + 1, j + 1, r, c});
    }
  return diff;
}

}  // namespace tricrit
