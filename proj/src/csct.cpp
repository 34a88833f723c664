#include "motif/csct.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <string>

#include "motif/errors.hpp"

namespace motif {

void CsctInstance::validate() const {
  if (universe > kMaxUniverse) {
    throw CapacityError("CSCT universe of " + std::to_string(universe) + " elements exceeds " +
                        std::to_string(kMaxUniverse));
  }
  const std::uint64_t full = universe == 0 ? 0 : (std::uint64_t{1} << universe) - 1;
  for (const auto& s : sets) {
    auto it = thresholds.find(s.color);
    if (it == thresholds.end()) throw InputError("CSCT set color without threshold");
    if ((s.elements & ~full) != 0) throw InputError("CSCT set element outside the universe");
  }
  for (auto [c, a] : thresholds) {
    if (a == 0) throw InputError("CSCT thresholds must be positive");
  }
}

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kMaxTableBits = std::uint64_t{1} << 31;

}  // namespace

std::optional<CsctSolution> solve_csct(const CsctInstance& inst) {
  inst.validate();
  const std::size_t n = inst.universe;
  const std::size_t m = inst.sets.size();
  const std::uint64_t states = std::uint64_t{1} << n;
  if (states * std::max<std::size_t>(m, 1) > kMaxTableBits) {
    throw CapacityError("CSCT table too large");
  }
  const std::uint32_t full = static_cast<std::uint32_t>(states - 1);
  if (n == 0) return CsctSolution{};

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inst.sets[a].color < inst.sets[b].color; });

  // Column j-1 and j of the table; column "0" is the empty prefix.
  std::vector<std::uint32_t> prev(states, kInf);
  std::vector<std::uint32_t> cur(states, kInf);
  prev[0] = 0;
  std::vector<std::uint64_t> take((states * m + 63) / 64, 0);
  auto set_take = [&](std::size_t j, std::uint64_t u) {
    const std::uint64_t bit = j * states + u;
    take[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  };
  auto get_take = [&](std::size_t j, std::uint64_t u) {
    const std::uint64_t bit = j * states + u;
    return ((take[bit >> 6] >> (bit & 63)) & 1) != 0;
  };

  for (std::size_t j = 0; j < m; ++j) {
    const auto& set = inst.sets[order[j]];
    const bool first_of_color = j == 0 || inst.sets[order[j - 1]].color != set.color;
    assert(j == 0 || inst.sets[order[j - 1]].color <= set.color);
    const std::uint32_t cap = inst.thresholds.at(set.color);
    for (std::uint64_t u = 0; u < states; ++u) {
      const std::uint32_t rest = prev[u & ~static_cast<std::uint64_t>(set.elements)];
      if (first_of_color) {
        if (prev[u] != kInf) {
          cur[u] = 0;
        } else if (rest != kInf) {
          cur[u] = 1;
          set_take(j, u);
        } else {
          cur[u] = kInf;
        }
      } else {
        const std::uint32_t discard = prev[u];
        const std::uint32_t add = (rest != kInf && rest < cap) ? rest + 1 : kInf;
        if (add < discard) {
          cur[u] = add;
          set_take(j, u);
        } else {
          cur[u] = discard;
        }
      }
    }
    std::swap(prev, cur);
  }
  if (prev[full] == kInf) return std::nullopt;

  CsctSolution sol;
  std::uint64_t u = full;
  for (std::size_t j = m; j-- > 0;) {
    if (get_take(j, u)) {
      sol.chosen.push_back(order[j]);
      u &= ~static_cast<std::uint64_t>(inst.sets[order[j]].elements);
    }
  }
  assert(u == 0);
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

bool is_valid_cover(const CsctInstance& inst, const CsctSolution& sol) {
  std::uint64_t covered = 0;
  std::map<Color, std::uint32_t> used;
  for (std::size_t idx : sol.chosen) {
    if (idx >= inst.sets.size()) return false;
    covered |= inst.sets[idx].elements;
    ++used[inst.sets[idx].color];
  }
  for (auto [c, count] : used) {
    auto it = inst.thresholds.find(c);
    if (it == inst.thresholds.end() || count > it->second) return false;
  }
  const std::uint64_t full = inst.universe == 0 ? 0 : (std::uint64_t{1} << inst.universe) - 1;
  return covered == full;
}

}  // namespace motif
