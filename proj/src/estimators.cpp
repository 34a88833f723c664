#include "motif/estimators.hpp"

#include <algorithm>
#include <numeric>

#include "motif/errors.hpp"

namespace motif {

namespace {

// Branching search for a vertex cover of bounded size. `taken` marks
// vertices already in the cover; `deg` is the degree in the residual graph.
class VcSearch {
 public:
  explicit VcSearch(const Graph& g) : g_(g), taken_(g.size(), 0), deg_(g.size()) {
    for (Vertex v = 0; v < g.size(); ++v) deg_[v] = g.degree(v);
    edges_ = g.edge_count();
  }

  bool run(std::size_t budget) { return search(budget); }
  VertexSet cover() const {
    VertexSet out = cover_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void take(Vertex v) {
    taken_[v] = 1;
    cover_.push_back(v);
    for (Vertex w : g_.neighbors(v)) {
      if (!taken_[w]) {
        --deg_[w];
        --edges_;
      }
    }
  }

  void untake(Vertex v) {
    taken_[v] = 0;
    cover_.pop_back();
    for (Vertex w : g_.neighbors(v)) {
      if (!taken_[w]) {
        ++deg_[w];
        ++edges_;
      }
    }
  }

  bool search(std::size_t budget) {
    if (edges_ == 0) return true;
    if (budget == 0) return false;
    Vertex best = kNoVertex;
    Vertex leaf = kNoVertex;
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (taken_[v]) continue;
      if (best == kNoVertex || deg_[v] > deg_[best]) best = v;
      if (leaf == kNoVertex && deg_[v] == 1) leaf = v;
    }
    if (edges_ > budget * deg_[best]) return false;

    if (leaf != kNoVertex) {
      // Some optimal cover contains the neighbor of a degree-one vertex.
      Vertex u = kNoVertex;
      for (Vertex w : g_.neighbors(leaf)) {
        if (!taken_[w]) u = w;
      }
      take(u);
      if (search(budget - 1)) return true;
      untake(u);
      return false;
    }

    take(best);
    if (search(budget - 1)) return true;
    untake(best);

    if (deg_[best] <= budget) {
      std::vector<Vertex> nbrs;
      for (Vertex w : g_.neighbors(best)) {
        if (!taken_[w]) nbrs.push_back(w);
      }
      for (Vertex w : nbrs) take(w);
      if (search(budget - nbrs.size())) return true;
      for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) untake(*it);
    }
    return false;
  }

  const Graph& g_;
  std::vector<char> taken_;
  std::vector<std::size_t> deg_;
  std::size_t edges_ = 0;
  std::vector<Vertex> cover_;
};

std::size_t greedy_matching_size(const Graph& g) {
  std::vector<char> used(g.size(), 0);
  std::size_t size = 0;
  for (auto [u, v] : g.edges()) {
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      ++size;
    }
  }
  return size;
}

class CoClusterSearch {
 public:
  CoClusterSearch(const Graph& g, const Budget& budget) : g_(g), budget_(budget), alive_(g.size(), 1) {}

  // Vertex-disjoint obstructions each need their own deletion.
  std::size_t packing_bound() const {
    std::vector<char> alive = alive_;
    std::size_t count = 0;
    while (auto t = find_co_p3(g_, alive)) {
      for (Vertex x : *t) alive[x] = 0;
      ++count;
    }
    return count;
  }

  bool search(std::size_t budget) {
    auto triple = find_co_p3(g_, alive_);
    if (!triple) return true;
    if (budget == 0) return false;
    if ((++nodes_ & 0xff) == 0) budget_.check();
    if (packing_bound() > budget) return false;
    for (Vertex x : *triple) {
      alive_[x] = 0;
      deleted_.push_back(x);
      if (search(budget - 1)) return true;
      deleted_.pop_back();
      alive_[x] = 1;
    }
    return false;
  }

  VertexSet deleted() const {
    VertexSet out = deleted_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const Graph& g_;
  const Budget& budget_;
  std::vector<char> alive_;
  std::vector<Vertex> deleted_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<VertexSet> min_vertex_cover(const Graph& g, std::size_t max_size) {
  const std::size_t lower = greedy_matching_size(g);
  for (std::size_t k = lower; k <= max_size; ++k) {
    VcSearch s(g);
    if (s.run(k)) return s.cover();
  }
  return std::nullopt;
}

VertexSet min_vertex_cover(const Graph& g) { return *min_vertex_cover(g, g.size()); }

std::optional<VertexSet> dist_to_clique_set(const Graph& g, std::size_t max_size) {
  return min_vertex_cover(g.complement(), max_size);
}

VertexSet dist_to_clique_set(const Graph& g) { return *dist_to_clique_set(g, g.size()); }

std::optional<VertexSet> dist_to_co_cluster_set(const Graph& g, std::size_t max_size, const Budget& budget) {
  for (std::size_t k = CoClusterSearch(g, budget).packing_bound(); k <= max_size; ++k) {
    CoClusterSearch s(g, budget);
    if (s.search(k)) return s.deleted();
  }
  return std::nullopt;
}

VertexSet dist_to_co_cluster_set(const Graph& g) { return *dist_to_co_cluster_set(g, g.size()); }

std::optional<std::array<Vertex, 3>> find_co_p3(const Graph& g, const std::vector<char>& alive) {
  for (Vertex u = 0; u < g.size(); ++u) {
    if (!alive[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v <= u || !alive[v]) continue;
      // Walk both sorted lists to find the first alive w outside N[u] and N[v].
      auto nu = g.neighbors(u);
      auto nv = g.neighbors(v);
      std::size_t i = 0, j = 0;
      for (Vertex w = 0; w < g.size(); ++w) {
        while (i < nu.size() && nu[i] < w) ++i;
        while (j < nv.size() && nv[j] < w) ++j;
        if (!alive[w] || w == u || w == v) continue;
        if ((i < nu.size() && nu[i] == w) || (j < nv.size() && nv[j] == w)) continue;
        return std::array<Vertex, 3>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

bool is_co_cluster(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> alive(g.size(), 0);
  for (Vertex v : vertices) alive[v] = 1;
  return !find_co_p3(g, alive).has_value();
}

bool is_cluster(const Graph& g, std::span<const Vertex> vertices) {
  for (const auto& comp : connected_components(g, vertices)) {
    if (!is_clique(g, comp)) return false;
  }
  return true;
}

std::vector<VertexSet> co_cluster_classes(const Graph& g, std::span<const Vertex> vertices) {
  VertexSet sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  const Graph comp = g.induced(sorted).complement();
  std::vector<VertexSet> out;
  for (const auto& part : connected_components(comp)) {
    VertexSet mapped;
    for (Vertex i : part) mapped.push_back(sorted[i]);
    out.push_back(std::move(mapped));
  }
  return out;
}

Degree3Decomposition degree3_decomposition(const Graph& g) {
  Degree3Decomposition out;
  std::vector<char> high(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) >= 3) {
      high[v] = 1;
      out.high_degree.push_back(v);
    }
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!high[v]) rest.push_back(v);
  }
  auto low_neighbors = [&](Vertex v) {
    std::vector<Vertex> out_n;
    for (Vertex w : g.neighbors(v)) {
      if (!high[w]) out_n.push_back(w);
    }
    return out_n;
  };
  auto attach = [&](Vertex v) {
    VertexSet a;
    for (Vertex w : g.neighbors(v)) {
      if (high[w]) a.push_back(w);
    }
    return a;
  };

  for (const auto& comp : connected_components(g, rest)) {
    Vertex start = kNoVertex;
    for (Vertex v : comp) {
      if (low_neighbors(v).size() <= 1) {
        start = v;
        break;
      }
    }
    if (start == kNoVertex) {
      if (comp.size() != g.size()) {
        throw InputError("degree-3 decomposition needs a connected graph");
      }
      out.cycle = true;
      out.paths.clear();
      return out;
    }
    PathPiece piece;
    Vertex prev = kNoVertex;
    Vertex cur = start;
    while (cur != kNoVertex) {
      piece.vertices.push_back(cur);
      Vertex next = kNoVertex;
      for (Vertex w : low_neighbors(cur)) {
        if (w != prev) next = w;
      }
      prev = cur;
      cur = next;
    }
    if (piece.vertices.size() > 1 && piece.vertices.back() < piece.vertices.front()) {
      std::reverse(piece.vertices.begin(), piece.vertices.end());
    }
    piece.front_attach = attach(piece.vertices.front());
    piece.back_attach = attach(piece.vertices.back());
    out.paths.push_back(std::move(piece));
  }
  return out;
}

bool validate_clique_cover(const Graph& g, const std::vector<VertexSet>& cliques, CoverMode mode) {
  std::vector<std::size_t> seen(g.size(), 0);
  for (const auto& part : cliques) {
    if (part.empty()) return false;
    for (Vertex v : part) {
      if (v >= g.size()) return false;
    }
    VertexSet sorted = part;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (!is_clique(g, sorted)) return false;
    for (Vertex v : sorted) ++seen[v];
  }
  if (mode == CoverMode::vertex_partition) {
    return std::all_of(seen.begin(), seen.end(), [](std::size_t s) { return s == 1; });
  }
  for (auto [u, v] : g.edges()) {
    bool inside = false;
    for (const auto& part : cliques) {
      if (std::find(part.begin(), part.end(), u) != part.end() &&
          std::find(part.begin(), part.end(), v) != part.end()) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

std::vector<VertexSet> greedy_vertex_clique_cover(const Graph& g) {
  std::vector<VertexSet> parts;
  for (Vertex v = 0; v < g.size(); ++v) {
    bool placed = false;
    for (auto& part : parts) {
      if (std::all_of(part.begin(), part.end(), [&](Vertex u) { return g.adjacent(u, v); })) {
        part.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) parts.push_back({v});
  }
  return parts;
}

std::vector<VertexSet> edge_clique_cover_from_edges(const Graph& g) {
  std::vector<VertexSet> parts;
  for (auto [u, v] : g.edges()) parts.push_back({u, v});
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) parts.push_back({v});
  }
  return parts;
}

namespace {

struct LeafSearch {
  const Graph& g;
  std::vector<Edge> edges;
  std::vector<std::size_t> deg;
  std::size_t best = 0;

  static Vertex find(std::vector<Vertex>& parent, Vertex v) {
    while (parent[v] != v) v = parent[v];
    return v;
  }

  bool can_connect(const std::vector<Vertex>& parent, std::size_t from) const {
    std::vector<Vertex> p = parent;
    for (std::size_t i = from; i < edges.size(); ++i) {
      Vertex a = find(p, edges[i].first);
      Vertex b = find(p, edges[i].second);
      if (a != b) p[a] = b;
    }
    Vertex root = find(p, 0);
    for (Vertex v = 1; v < g.size(); ++v) {
      if (find(p, v) != root) return false;
    }
    return true;
  }

  void search(std::size_t i, std::vector<Vertex> parent, std::size_t tree_edges) {
    const std::size_t n = g.size();
    std::size_t inner = 0;
    for (std::size_t d : deg) inner += d >= 2;
    if (n - inner <= best) return;
    if (tree_edges == n - 1) {
      best = n - inner;
      return;
    }
    if (i == edges.size()) return;
    auto [u, v] = edges[i];
    Vertex a = find(parent, u);
    Vertex b = find(parent, v);
    if (a != b) {
      std::vector<Vertex> next = parent;
      next[a] = b;
      ++deg[u];
      ++deg[v];
      search(i + 1, std::move(next), tree_edges + 1);
      --deg[u];
      --deg[v];
    }
    if (can_connect(parent, i + 1)) search(i + 1, std::move(parent), tree_edges);
  }
};

}  // namespace

std::size_t max_leaf_oracle(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 10) throw CapacityError("max leaf oracle is limited to 10 vertices");
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  if (n == 0 || !is_connected(g, all)) throw InputError("max leaf oracle needs a connected graph");
  if (n == 1) return 0;
  if (n == 2) return 2;
  LeafSearch s{g, g.edges(), std::vector<std::size_t>(n, 0), 0};
  s.search(0, all, 0);
  return s.best;
}

ParamReport compute_param_report(const Graph& g, std::size_t max_size,
                                 const std::vector<VertexSet>* vertex_clique_cover,
                                 const std::vector<VertexSet>* edge_clique_cover, const Budget& budget) {
  ParamReport r;
  r.vertices = g.size();
  r.edges = g.edge_count();
  r.vertex_cover = min_vertex_cover(g, max_size);
  r.dist_to_clique = dist_to_clique_set(g, max_size);
  try {
    r.dist_to_co_cluster = dist_to_co_cluster_set(g, max_size, budget);
  } catch (const BudgetExceeded&) {
    r.dist_to_co_cluster_timed_out = true;
  }
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), Vertex{0});
  if (is_connected(g, all)) r.decomposition = degree3_decomposition(g);
  if (vertex_clique_cover) {
    r.vertex_clique_cover_valid = validate_clique_cover(g, *vertex_clique_cover, CoverMode::vertex_partition);
  }
  if (edge_clique_cover) {
    r.edge_clique_cover_valid = validate_clique_cover(g, *edge_clique_cover, CoverMode::edge_cover);
  }
  return r;
}

}  // namespace motif
