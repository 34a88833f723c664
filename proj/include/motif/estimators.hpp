#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "motif/execution.hpp"
#include "motif/graph.hpp"

namespace motif {

/// Minimum vertex cover by iterative deepening over the two-way branch
/// "v in the cover, or all of N(v) in the cover" on a maximum-degree vertex.
/// Returns nullopt if no cover of size <= max_size exists.
std::optional<VertexSet> min_vertex_cover(const Graph& g, std::size_t max_size);
VertexSet min_vertex_cover(const Graph& g);

/// Minimum set whose removal leaves a clique: a minimum vertex cover of the
/// complement graph.
std::optional<VertexSet> dist_to_clique_set(const Graph& g, std::size_t max_size);
VertexSet dist_to_clique_set(const Graph& g);

/// Minimum set whose removal leaves a co-cluster graph (co-P3-free), by
/// three-way branching on an induced edge-plus-isolated-vertex triple.
/// No subexponential bound helps on dense random graphs, so the search polls
/// `budget` and throws BudgetExceeded when it runs out.
std::optional<VertexSet> dist_to_co_cluster_set(const Graph& g, std::size_t max_size, const Budget& budget = {});
VertexSet dist_to_co_cluster_set(const Graph& g);

/// First induced co-P3 (edge uv plus a vertex w adjacent to neither) among
/// `alive` vertices, scanning edges lexicographically. Returns {u, v, w}.
std::optional<std::array<Vertex, 3>> find_co_p3(const Graph& g, const std::vector<char>& alive);

bool is_co_cluster(const Graph& g, std::span<const Vertex> vertices);
bool is_cluster(const Graph& g, std::span<const Vertex> vertices);

/// Maximal independent classes of a co-cluster: the connected components of
/// the complement of G[vertices]. Ids are in the original graph.
std::vector<VertexSet> co_cluster_classes(const Graph& g, std::span<const Vertex> vertices);

/// A maximal path of G - S, in path order, with the S-neighbors of its two
/// ends. For a one-vertex path both attachment lists hold the same set.
struct PathPiece {
  std::vector<Vertex> vertices;
  VertexSet front_attach;
  VertexSet back_attach;
};

struct Degree3Decomposition {
  VertexSet high_degree;          // vertices of degree >= 3
  std::vector<PathPiece> paths;   // components of G - high_degree
  bool cycle = false;             // G itself is a cycle; paths is then empty
};

/// High-degree set and the path pieces of what remains. Expects a connected
/// graph; a cycle is reported through the `cycle` flag.
Degree3Decomposition degree3_decomposition(const Graph& g);

enum class CoverMode { vertex_partition, edge_cover };

/// Every part is a clique, plus either the partition property (every vertex
/// in exactly one part) or the edge-cover property (every edge inside a part).
bool validate_clique_cover(const Graph& g, const std::vector<VertexSet>& cliques, CoverMode mode);

/// First-fit clique partition in vertex order.
std::vector<VertexSet> greedy_vertex_clique_cover(const Graph& g);

/// Edge clique cover made of one two-vertex clique per edge, plus singleton
/// parts for isolated vertices.
std::vector<VertexSet> edge_clique_cover_from_edges(const Graph& g);

/// Exact max leaf number by enumerating spanning trees. Needs a connected
/// graph with at most 10 vertices (CapacityError otherwise).
std::size_t max_leaf_oracle(const Graph& g);

/// Structural parameters of one graph, as printed by `params`.
struct ParamReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::optional<VertexSet> vertex_cover;
  std::optional<VertexSet> dist_to_clique;
  std::optional<VertexSet> dist_to_co_cluster;
  bool dist_to_co_cluster_timed_out = false;
  std::optional<Degree3Decomposition> decomposition;  // only for connected graphs
  std::optional<bool> vertex_clique_cover_valid;
  std::optional<bool> edge_clique_cover_valid;
};

/// Parameters larger than `max_size` are left unset. `budget` bounds only the
/// co-cluster search.
ParamReport compute_param_report(const Graph& g, std::size_t max_size,
                                 const std::vector<VertexSet>* vertex_clique_cover = nullptr,
                                 const std::vector<VertexSet>* edge_clique_cover = nullptr,
                                 const Budget& budget = {});

}  // namespace motif
