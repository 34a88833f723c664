#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "motif/estimators.hpp"

namespace motif::testing {

namespace {

VertexSet members(std::uint64_t mask) {
  VertexSet out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

VertexSet complement_of(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!contains(s, v)) out.push_back(v);
  }
  return out;
}

template <typename Pred>
std::size_t smallest_set(const Graph& g, Pred pred) {
  const std::size_t n = g.size();
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < best && pred(members(mask))) best = size;
  }
  return best;
}

}  // namespace

std::optional<VertexSet> mask_brute(const Instance& inst) {
  const std::size_t n = inst.graph.size();
  if (n > 20) throw std::invalid_argument("mask brute force is limited to 20 vertices");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != inst.motif.total()) continue;
    VertexSet r = members(mask);
    if (verify_solution(inst, r)) return r;
  }
  return std::nullopt;
}

bool csct_exhaustive(const CsctInstance& inst) {
  const std::size_t m = inst.sets.size();
  const std::uint64_t full = inst.universe == 0 ? 0 : (std::uint64_t{1} << inst.universe) - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t covered = 0;
    std::map<Color, std::uint32_t> used;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) {
        covered |= inst.sets[i].elements;
        ++used[inst.sets[i].color];
      }
    }
    if (covered != full) continue;
    bool ok = true;
    for (auto [c, k] : used) ok = ok && k <= inst.thresholds.at(c);
    if (ok) return true;
  }
  return false;
}

namespace {

std::size_t matching_rec(const BipartiteGraph& b, std::size_t i, std::vector<char>& left, std::vector<char>& right) {
  if (i == b.edges.size()) return 0;
  std::size_t best = matching_rec(b, i + 1, left, right);
  auto [u, w] = b.edges[i];
  if (!left[u] && !right[w]) {
    left[u] = right[w] = 1;
    best = std::max(best, 1 + matching_rec(b, i + 1, left, right));
    left[u] = right[w] = 0;
  }
  return best;
}

}  // namespace

std::size_t matching_exhaustive(const BipartiteGraph& b) {
  std::vector<char> left(b.left, 0), right(b.right, 0);
  return matching_rec(b, 0, left, right);
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  for (auto [u, v] : g.edges()) {
    if (!contains(s, u) && !contains(s, v)) return false;
  }
  return true;
}

bool leaves_clique(const Graph& g, const VertexSet& s) { return is_clique(g, complement_of(g, s)); }

bool leaves_co_cluster(const Graph& g, const VertexSet& s) {
  // No induced edge-plus-isolated-vertex among the remaining vertices.
  const VertexSet rest = complement_of(g, s);
  for (Vertex u : rest) {
    for (Vertex v : rest) {
      if (u >= v || !g.adjacent(u, v)) continue;
      for (Vertex w : rest) {
        if (w != u && w != v && !g.adjacent(u, w) && !g.adjacent(v, w)) return false;
      }
    }
  }
  return true;
}

std::size_t min_vertex_cover_exhaustive(const Graph& g) {
  return smallest_set(g, [&](const VertexSet& s) { return is_vertex_cover(g, s); });
}

std::size_t dist_to_clique_exhaustive(const Graph& g) {
  return smallest_set(g, [&](const VertexSet& s) { return leaves_clique(g, s); });
}

std::size_t dist_to_co_cluster_exhaustive(const Graph& g) {
  return smallest_set(g, [&](const VertexSet& s) { return leaves_co_cluster(g, s); });
}

std::size_t max_leaf_by_cds(const Graph& g) {
  const std::size_t n = g.size();
  std::size_t best = n;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s = members(mask);
    if (s.size() >= best || !is_connected(g, s)) continue;
    bool dominating = true;
    for (Vertex v = 0; v < n && dominating; ++v) {
      if (contains(s, v)) continue;
      dominating = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) { return contains(s, w); });
    }
    if (dominating) best = s.size();
  }
  return n - best;
}

}  // namespace motif::testing
