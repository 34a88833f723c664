#include "motif/graph.hpp"

#include <algorithm>
#include <string>

#include "motif/errors.hpp"

namespace motif {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += list.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adjacency_[u];
  const auto& b = adjacency_[v];
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                              : std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> remap(size(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) remap[vertices[i]] = static_cast<Vertex>(i);
  Graph g(vertices.size());
  std::size_t twice = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adjacency_[vertices[i]]) {
      if (remap[w] != kNoVertex) g.adjacency_[i].push_back(remap[w]);
    }
    std::sort(g.adjacency_[i].begin(), g.adjacency_[i].end());
    twice += g.adjacency_[i].size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

Graph Graph::complement() const {
  const std::size_t n = size();
  Graph g(n);
  std::size_t twice = 0;
  for (Vertex u = 0; u < n; ++u) {
    const auto& nb = adjacency_[u];
    auto it = nb.begin();
    for (Vertex v = 0; v < n; ++v) {
      while (it != nb.end() && *it < v) ++it;
      if (v == u || (it != nb.end() && *it == v)) continue;
      g.adjacency_[u].push_back(v);
    }
    twice += g.adjacency_[u].size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

bool contains(std::span<const Vertex> sorted_set, Vertex v) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> s) {
  // 0 = outside s, 1 = unvisited member, 2 = visited
  std::vector<std::uint8_t> state(g.size(), 0);
  for (Vertex v : s) state[v] = 1;
  VertexSet order(s.begin(), s.end());
  std::sort(order.begin(), order.end());

  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex start : order) {
    if (state[start] != 1) continue;
    VertexSet comp;
    state[start] = 2;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (state[w] == 1) {
          state[w] = 2;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  VertexSet all(g.size());
  for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
  return connected_components(g, all);
}

bool is_connected(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) return false;
  return connected_components(g, s).size() == 1;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

}  // namespace motif
