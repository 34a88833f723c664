#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace motif {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
  /// and out-of-range endpoints raise InputError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `vertices`; new id i corresponds to vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Incremental edge collector producing a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0) : n_(n) {}

  Vertex add_vertex() { return static_cast<Vertex>(n_++); }
  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  std::size_t size() const { return n_; }

  Graph build() const { return Graph::from_edges(n_, edges_); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

bool contains(std::span<const Vertex> sorted_set, Vertex v);

/// Maximal subsets of `s` connected inside G[s], ordered by smallest member.
/// `s` need not be sorted; every output set is.
std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> s);

/// Components of the whole graph.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g, std::span<const Vertex> s);
bool is_clique(const Graph& g, std::span<const Vertex> s);

}  // namespace motif
