#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "internal.hpp"
#include "motif/errors.hpp"
#include "motif/estimators.hpp"

namespace motif {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kNames{{
    {Algorithm::brute, "brute"},
    {Algorithm::dist_clique, "dist-clique"},
    {Algorithm::vertex_cover, "vc"},
    {Algorithm::edge_clique_cover, "ecc"},
    {Algorithm::vertex_clique_cover, "vcc"},
    {Algorithm::co_cluster, "cocluster"},
    {Algorithm::max_leaf, "maxleaf"},
}};

}  // namespace

std::string_view to_string(Algorithm a) {
  for (auto [alg, name] : kNames) {
    if (alg == a) return name;
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto [alg, n] : kNames) {
    if (n == name) return alg;
  }
  return std::nullopt;
}

SolveOutcome solve(const Instance& inst, const SolverConfig& config) {
  config.exec.budget.check();
  switch (config.algorithm) {
    case Algorithm::brute: return solve_brute(inst, config.exec.budget);
    case Algorithm::dist_clique: return solve_dist_clique(inst, config);
    case Algorithm::vertex_cover: return solve_vertex_cover(inst, config);
    case Algorithm::edge_clique_cover:
      if (!config.edge_clique_cover) throw InputError("edge clique cover required");
      return solve_edge_clique_cover(inst, *config.edge_clique_cover, config);
    case Algorithm::vertex_clique_cover:
      if (!config.vertex_clique_cover) throw InputError("vertex clique cover required");
      return solve_vertex_clique_cover(inst, *config.vertex_clique_cover, config);
    case Algorithm::co_cluster: return solve_co_cluster(inst, config);
    case Algorithm::max_leaf: return solve_max_leaf_xp(inst, config);
  }
  throw std::logic_error("unhandled algorithm");
}

SolveOutcome solve_dist_clique(const Instance& inst, const SolverConfig& config) {
  return detail::run_dispatched(inst, [&](const RestrictedInstance& sub) {
    auto s = dist_to_clique_set(sub.instance.graph, config.max_parameter);
    if (!s) detail::check_parameter(config.max_parameter + 1, config.max_parameter, "distance to clique");
    return detail::dist_clique_core(sub.instance, *s, config.exec);
  });
}

SolveOutcome solve_vertex_cover(const Instance& inst, const SolverConfig& config) {
  return detail::run_dispatched(inst, [&](const RestrictedInstance& sub) {
    auto s = min_vertex_cover(sub.instance.graph, config.max_parameter);
    if (!s) detail::check_parameter(config.max_parameter + 1, config.max_parameter, "vertex cover");
    return detail::vertex_cover_core(sub.instance, *s, config.exec);
  });
}

SolveOutcome solve_edge_clique_cover(const Instance& inst, const std::vector<VertexSet>& cover,
                                     const SolverConfig& config) {
  inst.validate();
  if (!validate_clique_cover(inst.graph, cover, CoverMode::edge_cover)) {
    throw InputError("invalid edge clique cover");
  }
  return detail::run_dispatched(inst, [&](const RestrictedInstance& sub) {
    return detail::edge_clique_cover_core(sub.instance, detail::restrict_cliques(cover, sub), config.exec);
  });
}

SolveOutcome solve_vertex_clique_cover(const Instance& inst, const std::vector<VertexSet>& partition,
                                       const SolverConfig& config) {
  inst.validate();
  if (!validate_clique_cover(inst.graph, partition, CoverMode::vertex_partition)) {
    throw InputError("invalid vertex clique cover");
  }
  return detail::run_dispatched(inst, [&](const RestrictedInstance& sub) {
    return detail::vertex_clique_cover_core(sub.instance, detail::restrict_cliques(partition, sub), config.exec);
  });
}

SolveOutcome solve_co_cluster(const Instance& inst, const SolverConfig& config) {
  return detail::run_dispatched(inst, [&](const RestrictedInstance& sub) {
    auto x = dist_to_co_cluster_set(sub.instance.graph, config.max_parameter, config.exec.budget);
    if (!x) detail::check_parameter(config.max_parameter + 1, config.max_parameter, "distance to co-cluster");
    return detail::co_cluster_core(sub.instance, *x, config.exec);
  });
}

SolveOutcome solve_max_leaf_xp(const Instance& inst, const SolverConfig& config) {
  return detail::run_dispatched(inst, [&](const RestrictedInstance& sub) {
    return detail::max_leaf_core(sub.instance, config.max_parameter, config.exec);
  });
}

namespace detail {

SolveOutcome run_dispatched(const Instance& inst, const ComponentSolver& fn) {
  inst.validate();
  const RestrictedInstance pruned = prune_wrong_colors(inst);
  for (const auto& comp : connected_components(pruned.instance.graph)) {
    if (comp.size() < inst.motif.total()) continue;
    const VertexSet original = pruned.lift(comp);
    if (!inst.motif.subset_of(colors_of(inst.colors, original))) continue;
    const RestrictedInstance sub = restrict_to(inst, original);
    if (Witness w = fn(sub)) {
      VertexSet lifted = sub.lift(*w);
      if (!verify_solution(inst, lifted)) {
        throw std::logic_error("solver produced an invalid witness");
      }
      return SolveOutcome::yes(std::move(lifted));
    }
  }
  return SolveOutcome::no();
}

VertexSet restrict_set(std::span<const Vertex> set, const RestrictedInstance& r) {
  VertexSet out;
  for (Vertex v : set) {
    if (v < r.from_parent.size() && r.from_parent[v] != kNoVertex) out.push_back(r.from_parent[v]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexSet> restrict_cliques(const std::vector<VertexSet>& cliques, const RestrictedInstance& r) {
  std::vector<VertexSet> out;
  for (const auto& q : cliques) {
    VertexSet m = restrict_set(q, r);
    if (!m.empty()) out.push_back(std::move(m));
  }
  return out;
}

bool complete_from(const Instance& inst, VertexSet& chosen, std::span<const Vertex> pool, Motif need) {
  if (need.empty()) return true;
  std::vector<Vertex> sorted_chosen = chosen;
  std::sort(sorted_chosen.begin(), sorted_chosen.end());
  for (Vertex v : pool) {
    const Color c = inst.colors[v];
    if (need.multiplicity(c) == 0 || contains(sorted_chosen, v)) continue;
    chosen.push_back(v);
    need.remove(c);
    if (need.empty()) break;
  }
  std::sort(chosen.begin(), chosen.end());
  return need.empty();
}

Motif colors_of_mask(const Instance& inst, std::span<const Vertex> items, std::uint64_t mask) {
  Motif m;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if ((mask >> i) & 1) m.add(inst.colors[items[i]]);
  }
  return m;
}

void check_parameter(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap) {
    throw CapacityError(std::string(what) + " exceeds the enumeration cap of " + std::to_string(cap));
  }
}

}  // namespace detail
}  // namespace motif
