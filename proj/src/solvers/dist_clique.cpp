#include <algorithm>

#include "internal.hpp"
#include "motif/csct.hpp"
#include "motif/errors.hpp"

namespace motif::detail {

Witness dist_clique_core(const Instance& inst, const VertexSet& deletion, const ExecutionContext& ctx) {
  const Graph& g = inst.graph;
  check_parameter(deletion.size(), CsctInstance::kMaxUniverse, "distance-to-clique set");
  std::vector<Vertex> clique;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!contains(deletion, v)) clique.push_back(v);
  }
  const Motif clique_colors = colors_of(inst.colors, clique);
  const std::size_t k = deletion.size();

  auto attempt = [&](std::size_t index) -> Witness {
    const std::uint64_t mask = index;
    const Motif inside = colors_of_mask(inst, deletion, mask);
    if (!inside.subset_of(inst.motif)) return std::nullopt;
    const Motif rest = inst.motif - inside;
    VertexSet part;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1) part.push_back(deletion[i]);
    }

    if (part.empty()) {
      // Any subset of the clique is connected.
      VertexSet r;
      if (complete_from(inst, r, clique, inst.motif)) return r;
      return std::nullopt;
    }
    if (rest.empty()) {
      if (is_connected(g, part)) return part;
      return std::nullopt;
    }
    // Clique vertices for the rest exist regardless of which ones join the
    // components, so check availability once.
    if (!rest.subset_of(clique_colors)) return std::nullopt;

    const auto comps = connected_components(g, part);
    std::vector<std::size_t> comp_of(g.size(), 0);
    for (std::size_t j = 0; j < comps.size(); ++j) {
      for (Vertex v : comps[j]) comp_of[v] = j;
    }
    CsctInstance cover;
    cover.universe = comps.size();
    for (auto [c, m] : rest.entries()) cover.thresholds[c] = m;
    std::vector<Vertex> set_vertex;
    for (Vertex v : clique) {
      if (rest.multiplicity(inst.colors[v]) == 0) continue;
      std::uint32_t elements = 0;
      for (Vertex w : g.neighbors(v)) {
        if (contains(part, w)) elements |= std::uint32_t{1} << comp_of[w];
      }
      if (elements == 0) continue;
      cover.sets.push_back({inst.colors[v], elements});
      set_vertex.push_back(v);
    }
    auto sol = solve_csct(cover);
    if (!sol) return std::nullopt;
    VertexSet r = part;
    for (std::size_t idx : sol->chosen) r.push_back(set_vertex[idx]);
    std::sort(r.begin(), r.end());
    const Motif need = inst.motif - colors_of(inst.colors, r);
    if (!complete_from(inst, r, clique, need)) return std::nullopt;
    return r;
  };

  return first_success<VertexSet>(std::size_t{1} << k, ctx, attempt);
}

}  // namespace motif::detail
