#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "motif/solvers.hpp"

namespace motif {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCapacity = 3;

struct AutoChoice {
  Algorithm algorithm;
  std::string parameter;  // e.g. "distance-to-clique"
  std::size_t value = 0;
};

/// Picks the solver with the smallest estimated search space among the
/// parameters that fit under `max_parameter`. Brute force is a candidate only
/// up to kBruteMaxVertices vertices; with no candidate left this throws
/// CapacityError. A co-cluster estimate that overruns `estimate_budget` drops
/// that candidate and appends a note to `notes`.
AutoChoice choose_algorithm(const Instance& inst, const std::optional<std::vector<VertexSet>>& vertex_clique_cover,
                            const std::optional<std::vector<VertexSet>>& edge_clique_cover,
                            std::size_t max_parameter = 24, const Budget& estimate_budget = {},
                            std::vector<std::string>* notes = nullptr);

/// Runs the command line `argv[1..]` and returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace motif
