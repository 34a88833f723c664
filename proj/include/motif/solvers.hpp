#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "motif/execution.hpp"
#include "motif/instance.hpp"

namespace motif {

enum class Algorithm {
  brute,
  dist_clique,
  vertex_cover,
  edge_clique_cover,
  vertex_clique_cover,
  co_cluster,
  max_leaf,
};

/// Command-line names: brute, dist-clique, vc, ecc, vcc, cocluster, maxleaf.
std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct SolverConfig {
  Algorithm algorithm = Algorithm::brute;
  std::optional<std::vector<VertexSet>> vertex_clique_cover;
  std::optional<std::vector<VertexSet>> edge_clique_cover;
  ExecutionContext exec;
  // Largest deletion set / cover / high-degree set a solver will enumerate
  // subsets of; beyond it the solver raises CapacityError.
  std::size_t max_parameter = 24;
};

/// Runs the configured algorithm. Solvers that need a clique cover take it
/// from the config and raise InputError when it is missing or invalid.
SolveOutcome solve(const Instance& inst, const SolverConfig& config);

/// Reference solver: tries every choice of vertices per motif color and
/// checks connectivity. At most 25 vertices (CapacityError otherwise).
SolveOutcome solve_brute(const Instance& inst, const Budget& budget = {});
inline constexpr std::size_t kBruteMaxVertices = 25;

/// Guesses the part of a solution inside a clique-deletion set S, then
/// connects the components of that part through clique vertices by a
/// colored set cover with thresholds.
SolveOutcome solve_dist_clique(const Instance& inst, const SolverConfig& config = {});

/// Guesses the part inside a minimum vertex cover, then picks connector
/// vertices of the independent side by bipartite matching over ordered
/// partitions of its components.
SolveOutcome solve_vertex_cover(const Instance& inst, const SolverConfig& config = {});

/// Needs an edge clique cover. Guesses the cliques that carry a spanning
/// tree of the solution and hands an incidence graph to the vertex-cover
/// solver, with the clique nodes as the known cover.
SolveOutcome solve_edge_clique_cover(const Instance& inst, const std::vector<VertexSet>& cover,
                                     const SolverConfig& config = {});

/// Needs a vertex clique partition. Guesses the touched cliques, the tree of
/// transversal edges joining them and which endpoints coincide, then
/// realizes endpoint colors and vertices.
SolveOutcome solve_vertex_clique_cover(const Instance& inst, const std::vector<VertexSet>& partition,
                                       const SolverConfig& config = {});

/// Deletion set X to a co-cluster graph. Solutions inside one independent
/// class plus X go to the vertex-cover solver; solutions meeting two classes
/// go to the distance-to-clique solver on an edge-completed graph.
SolveOutcome solve_co_cluster(const Instance& inst, const SolverConfig& config = {});

/// Guesses the high-degree vertices of the solution, then one prefix and/or
/// suffix per maximal path of the rest, with a memoized multiset search.
SolveOutcome solve_max_leaf_xp(const Instance& inst, const SolverConfig& config = {});

/// Jumbled pattern matching: first window [i, j] (inclusive) of `word` whose
/// color counts equal the motif.
std::optional<std::pair<std::size_t, std::size_t>> solve_on_path(std::span<const Color> word, const Motif& motif);

/// Subdivided-star form: choose a prefix of every word so that together the
/// prefixes are an anagram of `target`.
struct StarWordProblem {
  Motif target;
  std::vector<std::vector<Color>> words;
};

/// Prefix lengths, one per word, or nullopt. InputError on an empty word list.
std::optional<std::vector<std::size_t>> solve_star_words(const StarWordProblem& problem);

}  // namespace motif
