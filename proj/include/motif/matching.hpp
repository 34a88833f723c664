#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace motif {

/// Explicitly bipartite graph with sides 0..left-1 and 0..right-1.
struct BipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Throws InputError on out-of-range indices or duplicate edges.
  void validate() const;
};

struct MatchingResult {
  std::vector<std::pair<std::size_t, std::size_t>> matching;  // sorted by left index
  std::vector<std::size_t> left_cover;                         // sorted
  std::vector<std::size_t> right_cover;                        // sorted

  std::size_t size() const { return matching.size(); }
  std::size_t cover_size() const { return left_cover.size() + right_cover.size(); }
};

/// Maximum-cardinality matching by repeated augmenting-path search, plus the
/// König minimum vertex cover read off the alternating-reachability sets:
/// (left not reachable) + (right reachable) from the unmatched left vertices.
MatchingResult max_matching_with_cover(const BipartiteGraph& b);

}  // namespace motif
