#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "motif/graph.hpp"

namespace motif {

/// Colored Set Cover with Thresholds: cover the universe {0..universe-1} with
/// sets from the family, using at most threshold[c] sets of color c.
struct CsctInstance {
  struct Set {
    Color color = 0;
    std::uint32_t elements = 0;  // bitmask over the universe
  };

  std::size_t universe = 0;
  std::vector<Set> sets;
  std::map<Color, std::uint32_t> thresholds;

  /// Throws InputError on missing/zero thresholds or elements outside the
  /// universe, CapacityError when the universe exceeds kMaxUniverse.
  void validate() const;

  static constexpr std::size_t kMaxUniverse = 32;
};

/// Indices (into CsctInstance::sets) of a threshold-respecting cover,
/// ascending.
struct CsctSolution {
  std::vector<std::size_t> chosen;
};

/// Subset DP over the universe, processing the sets grouped by color. Table
/// entry (U, j) holds the fewest sets of the color of set j used by any
/// threshold-respecting choice among the first j sets that covers U, with a
/// take/discard bit per entry for reconstruction. O(n m 2^n) time.
std::optional<CsctSolution> solve_csct(const CsctInstance& inst);

/// True iff `sol` covers the universe and respects every threshold.
bool is_valid_cover(const CsctInstance& inst, const CsctSolution& sol);

}  // namespace motif
