#include <algorithm>
#include <numeric>

#include "motif/generators.hpp"

namespace motif {

namespace {

std::vector<Vertex> all_but(const Graph& g, Vertex v) {
  std::vector<Vertex> rest;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (u != v) rest.push_back(u);
  }
  return rest;
}

}  // namespace

bool removal_leaves_paths(const Graph& g, Vertex v) {
  if (v >= g.size()) return false;
  const auto rest = all_but(g, v);
  for (const auto& comp : connected_components(g, rest)) {
    std::size_t edge_ends = 0;
    for (Vertex u : comp) {
      std::size_t d = 0;
      for (Vertex w : g.neighbors(u)) d += w != v;
      if (d > 2) return false;
      edge_ends += d;
    }
    // A connected graph with max degree 2 is a path iff it is a tree.
    if (edge_ends / 2 != comp.size() - 1) return false;
  }
  return true;
}

bool removal_leaves_cluster(const Graph& g, Vertex v) {
  if (v >= g.size()) return false;
  const auto rest = all_but(g, v);
  for (const auto& comp : connected_components(g, rest)) {
    if (!is_clique(g, comp)) return false;
  }
  return true;
}

std::size_t numbering_gap(const Graph& g) {
  std::size_t gap = 0;
  for (auto [u, v] : g.edges()) gap = std::max<std::size_t>(gap, v - u);
  return gap;
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
  std::vector<bool> hit(g.size(), false);
  for (Vertex v : s) {
    if (v >= g.size()) return false;
    hit[v] = true;
    for (Vertex w : g.neighbors(v)) hit[w] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_split_with_clique(const Graph& g, const VertexSet& clique_side) {
  if (!is_clique(g, clique_side)) return false;
  for (auto [u, v] : g.edges()) {
    if (!contains(clique_side, u) && !contains(clique_side, v)) return false;
  }
  return true;
}

bool has_block_tiling(const Instance& inst, Vertex center, Color begin, Color end) {
  const Graph& g = inst.graph;
  if (center >= g.size()) return false;
  if (connected_components(g).size() != 1) return false;
  for (Vertex first : g.neighbors(center)) {
    Vertex prev = center;
    Vertex cur = first;
    bool open = false;  // inside a block
    for (;;) {
      const Color c = inst.colors[cur];
      if (!open) {
        if (c != begin) return false;
        open = true;
      } else if (c == end) {
        open = false;
      } else if (c == begin) {
        return false;
      }
      const auto nb = g.neighbors(cur);
      if (nb.size() > 2) return false;
      if (nb.size() == 1) break;
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      if (next == center) return false;
      prev = cur;
      cur = next;
    }
    if (open) return false;
  }
  return true;
}

std::size_t leaf_count(const Graph& g) {
  std::size_t leaves = 0;
  for (Vertex v = 0; v < g.size(); ++v) leaves += g.degree(v) == 1;
  return leaves;
}

}  // namespace motif
