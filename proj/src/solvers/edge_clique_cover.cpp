#include <algorithm>
#include <set>

#include "internal.hpp"

namespace motif::detail {

namespace {

// Families of cliques that are connected through shared vertices, grown one
// clique at a time and deduplicated per size. Families of one size are
// sorted, so the enumeration order is deterministic.
std::vector<std::vector<std::size_t>> connected_families(const std::vector<VertexSet>& cover, std::size_t max_size) {
  const std::size_t k = cover.size();
  std::vector<std::vector<char>> meets(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      VertexSet common;
      std::set_intersection(cover[a].begin(), cover[a].end(), cover[b].begin(), cover[b].end(),
                            std::back_inserter(common));
      meets[a][b] = meets[b][a] = !common.empty();
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::set<std::vector<std::size_t>> level;
  for (std::size_t a = 0; a < k; ++a) level.insert({a});
  for (std::size_t size = 1; size <= max_size && !level.empty(); ++size) {
    out.insert(out.end(), level.begin(), level.end());
    if (size == max_size) break;
    std::set<std::vector<std::size_t>> next;
    for (const auto& fam : level) {
      for (std::size_t b = 0; b < k; ++b) {
        if (std::binary_search(fam.begin(), fam.end(), b)) continue;
        bool touches = std::any_of(fam.begin(), fam.end(), [&](std::size_t a) { return meets[a][b]; });
        if (!touches) continue;
        auto grown = fam;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), b), b);
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

Witness edge_clique_cover_core(const Instance& inst, const std::vector<VertexSet>& cover, const ExecutionContext& ctx) {
  const std::size_t total = inst.motif.total();
  if (total == 1) {
    const Color c = inst.motif.entries().front().first;
    for (Vertex v = 0; v < inst.graph.size(); ++v) {
      if (inst.colors[v] == c) return VertexSet{v};
    }
    return std::nullopt;
  }
  // A spanning tree of a solution has |M|-1 edges, each inside some clique
  // of the cover, so that many cliques always suffice.
  const auto families = connected_families(cover, total - 1);
  const Color gamma = inst.motif.color_bound();

  auto attempt = [&](std::size_t index) -> Witness {
    const auto& fam = families[index];
    VertexSet w;
    for (std::size_t a : fam) w.insert(w.end(), cover[a].begin(), cover[a].end());
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (w.size() < total || !inst.motif.subset_of(colors_of(inst.colors, w))) return std::nullopt;

    // Incidence graph: clique nodes 0..|F|-1 colored gamma, then W.
    const std::size_t f = fam.size();
    GraphBuilder b(f + w.size());
    Instance inc;
    inc.colors.assign(f, gamma);
    for (std::size_t i = 0; i < w.size(); ++i) inc.colors.push_back(inst.colors[w[i]]);
    for (std::size_t a = 0; a < f; ++a) {
      for (Vertex v : cover[fam[a]]) {
        const auto pos = std::lower_bound(w.begin(), w.end(), v) - w.begin();
        b.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(f + pos));
      }
    }
    inc.graph = b.build();
    inc.motif = inst.motif;
    inc.motif.add(gamma, static_cast<std::uint32_t>(f));
    VertexSet known(f);
    for (std::size_t a = 0; a < f; ++a) known[a] = static_cast<Vertex>(a);

    ExecutionContext inner = ctx;
    inner.mode = Execution::serial;
    Witness r = vertex_cover_core(inc, known, inner);
    if (!r) return std::nullopt;
    VertexSet out;
    for (Vertex v : *r) {
      if (v >= f) out.push_back(w[v - f]);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  return first_success<VertexSet>(families.size(), ctx, attempt);
}

}  // namespace motif::detail
