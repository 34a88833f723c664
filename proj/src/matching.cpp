#include "motif/matching.hpp"

#include <algorithm>
#include <set>

#include "motif/errors.hpp"

namespace motif {

void BipartiteGraph::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto e : edges) {
    if (e.first >= left || e.second >= right) throw InputError("bipartite edge index out of range");
    if (!seen.insert(e).second) throw InputError("duplicate bipartite edge");
  }
}

namespace {

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

struct Matcher {
  const std::vector<std::vector<std::size_t>>& adj;
  std::vector<std::size_t>& match_left;
  std::vector<std::size_t>& match_right;
  std::vector<char> visited;

  bool augment(std::size_t u) {
    for (std::size_t w : adj[u]) {
      if (visited[w]) continue;
      visited[w] = 1;
      if (match_right[w] == kFree || augment(match_right[w])) {
        match_left[u] = w;
        match_right[w] = u;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

MatchingResult max_matching_with_cover(const BipartiteGraph& b) {
  std::vector<std::vector<std::size_t>> adj(b.left);
  for (auto [u, w] : b.edges) adj[u].push_back(w);
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<std::size_t> match_left(b.left, kFree);
  std::vector<std::size_t> match_right(b.right, kFree);
  Matcher m{adj, match_left, match_right, {}};
  for (std::size_t u = 0; u < b.left; ++u) {
    m.visited.assign(b.right, 0);
    m.augment(u);
  }

  // Alternating reachability from free left vertices: left->right along any
  // edge, right->left along matching edges.
  std::vector<char> reach_left(b.left, 0);
  std::vector<char> reach_right(b.right, 0);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < b.left; ++u) {
    if (match_left[u] == kFree) {
      reach_left[u] = 1;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (reach_right[w]) continue;
      reach_right[w] = 1;
      std::size_t next = match_right[w];
      if (next != kFree && !reach_left[next]) {
        reach_left[next] = 1;
        stack.push_back(next);
      }
    }
  }

  MatchingResult out;
  for (std::size_t u = 0; u < b.left; ++u) {
    if (match_left[u] != kFree) out.matching.emplace_back(u, match_left[u]);
    if (!reach_left[u]) out.left_cover.push_back(u);
  }
  for (std::size_t w = 0; w < b.right; ++w) {
    if (reach_right[w]) out.right_cover.push_back(w);
  }
  return out;
}

}  // namespace motif
