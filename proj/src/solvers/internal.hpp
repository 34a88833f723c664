#pragma once

// Shared plumbing of the solver implementations. Every *_core function takes
// an instance in its own vertex ids and returns a witness in those ids, or
// nullopt. Cores do not require a connected graph.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "motif/instance.hpp"
#include "motif/solvers.hpp"

namespace motif::detail {

using Witness = std::optional<VertexSet>;
using ComponentSolver = std::function<Witness(const RestrictedInstance&)>;

/// Validates, drops off-motif colors, runs `fn` on every connected component
/// that could host a solution, lifts and verifies the first witness.
SolveOutcome run_dispatched(const Instance& inst, const ComponentSolver& fn);

/// Maps a vertex set or clique list of the parent into a restriction,
/// dropping vertices that are absent and then empty cliques.
VertexSet restrict_set(std::span<const Vertex> set, const RestrictedInstance& r);
std::vector<VertexSet> restrict_cliques(const std::vector<VertexSet>& cliques, const RestrictedInstance& r);

/// Adds to `chosen` the smallest-id vertices of `pool` (not already chosen)
/// whose colors make up `need`. Returns false when the pool runs short.
bool complete_from(const Instance& inst, VertexSet& chosen, std::span<const Vertex> pool, Motif need);

/// Colors of the vertices of `mask` over `items`.
Motif colors_of_mask(const Instance& inst, std::span<const Vertex> items, std::uint64_t mask);

/// Throws CapacityError when a structural set is larger than the cap.
void check_parameter(std::size_t size, std::size_t cap, const char* what);

Witness dist_clique_core(const Instance& inst, const VertexSet& deletion, const ExecutionContext& ctx);
Witness vertex_cover_core(const Instance& inst, const VertexSet& cover, const ExecutionContext& ctx);
Witness edge_clique_cover_core(const Instance& inst, const std::vector<VertexSet>& cover, const ExecutionContext& ctx);
Witness vertex_clique_cover_core(const Instance& inst, const std::vector<VertexSet>& partition,
                                 const ExecutionContext& ctx);
Witness co_cluster_core(const Instance& inst, const VertexSet& deletion, const ExecutionContext& ctx);
/// Needs a connected graph.
Witness max_leaf_core(const Instance& inst, std::size_t max_parameter, const ExecutionContext& ctx);

}  // namespace motif::detail
