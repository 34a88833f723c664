#include <algorithm>

#include "internal.hpp"
#include "motif/combinatorics.hpp"
#include "motif/matching.hpp"

namespace motif::detail {

namespace {

struct Guess {
  const Instance& inst;
  VertexSet part;                      // R ∩ S
  std::vector<VertexSet> comps;        // components of G[part]
  std::vector<Vertex> available;       // independent vertices with a neighbor in part
  std::vector<std::uint64_t> touches;  // per available vertex: mask of adjacent comps
  Motif rest;                          // M minus c(part)
};

// Connector search for one ordered partition: B has one left vertex per
// block and one right vertex per copy of each color of `rest`.
Witness try_ordered_partition(const Guess& g, const Blocks& blocks) {
  const std::size_t l = blocks.size();
  std::vector<std::uint64_t> block_mask(l, 0);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t c : blocks[i]) block_mask[i] |= std::uint64_t{1} << c;
  }
  // candidates[i][x]: smallest available vertex of color x usable for block i
  const auto entries = g.rest.entries();
  std::vector<std::vector<Vertex>> candidate(l, std::vector<Vertex>(entries.size(), kNoVertex));
  std::uint64_t earlier = 0;
  for (std::size_t i = 0; i < l; ++i) {
    bool any = false;
    for (std::size_t a = 0; a < g.available.size(); ++a) {
      const std::uint64_t t = g.touches[a];
      if ((t & block_mask[i]) != block_mask[i]) continue;
      if (i > 0 && (t & earlier) == 0) continue;
      const Color c = g.inst.colors[g.available[a]];
      for (std::size_t x = 0; x < entries.size(); ++x) {
        if (entries[x].first == c && candidate[i][x] == kNoVertex) {
          candidate[i][x] = g.available[a];
          any = true;
        }
      }
    }
    if (!any) return std::nullopt;
    earlier |= block_mask[i];
  }

  BipartiteGraph b;
  b.left = l;
  std::vector<std::size_t> copy_color;
  for (std::size_t x = 0; x < entries.size(); ++x) {
    for (std::uint32_t r = 0; r < entries[x].second; ++r) copy_color.push_back(x);
  }
  b.right = copy_color.size();
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t y = 0; y < copy_color.size(); ++y) {
      if (candidate[i][copy_color[y]] != kNoVertex) b.edges.emplace_back(i, y);
    }
  }
  const MatchingResult m = max_matching_with_cover(b);
  if (m.size() < l) return std::nullopt;

  VertexSet r = g.part;
  for (auto [i, y] : m.matching) r.push_back(candidate[i][copy_color[y]]);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  const Motif need = g.inst.motif - colors_of(g.inst.colors, r);
  if (!complete_from(g.inst, r, g.available, need)) return std::nullopt;
  if (!verify_solution(g.inst, r)) return std::nullopt;
  return r;
}

}  // namespace

Witness vertex_cover_core(const Instance& inst, const VertexSet& cover, const ExecutionContext& ctx) {
  const Graph& g = inst.graph;
  check_parameter(cover.size(), 24, "vertex cover");
  std::vector<Vertex> independent;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!contains(cover, v)) independent.push_back(v);
  }
  const auto masks = masks_by_cardinality(cover.size());

  auto attempt = [&](std::size_t index) -> Witness {
    const std::uint64_t mask = masks[index];
    const Motif inside = colors_of_mask(inst, cover, mask);
    if (!inside.subset_of(inst.motif)) return std::nullopt;

    Guess guess{inst, {}, {}, {}, {}, inst.motif - inside};
    for (std::size_t i = 0; i < cover.size(); ++i) {
      if ((mask >> i) & 1) guess.part.push_back(cover[i]);
    }
    if (guess.part.empty()) {
      // R is an independent set, so a single vertex.
      if (inst.motif.total() != 1) return std::nullopt;
      const Color c = inst.motif.entries().front().first;
      for (Vertex v : independent) {
        if (inst.colors[v] == c) return VertexSet{v};
      }
      return std::nullopt;
    }
    if (guess.rest.empty()) {
      if (is_connected(g, guess.part)) return guess.part;
      return std::nullopt;
    }

    guess.comps = connected_components(g, guess.part);
    std::vector<std::size_t> comp_of(g.size(), 0);
    for (std::size_t j = 0; j < guess.comps.size(); ++j) {
      for (Vertex v : guess.comps[j]) comp_of[v] = j;
    }
    for (Vertex v : independent) {
      std::uint64_t t = 0;
      for (Vertex w : g.neighbors(v)) {
        if (contains(guess.part, w)) t |= std::uint64_t{1} << comp_of[w];
      }
      if (t == 0) continue;
      guess.available.push_back(v);
      guess.touches.push_back(t);
    }
    // Completion draws from the same pool whatever the connectors are.
    if (!guess.rest.subset_of(colors_of(inst.colors, guess.available))) return std::nullopt;

    const std::size_t kp = guess.comps.size();
    if (kp == 1) {
      VertexSet r = guess.part;
      if (complete_from(inst, r, guess.available, guess.rest)) return r;
      return std::nullopt;
    }
    const std::size_t max_l = std::min(kp, guess.rest.total());
    for (std::size_t l = 1; l <= max_l; ++l) {
      Witness found;
      for_each_ordered_partition(kp, l, [&](const Blocks& blocks) {
        found = try_ordered_partition(guess, blocks);
        return !found.has_value();
      });
      if (found) return found;
      ctx.budget.check();
    }
    return std::nullopt;
  };

  return first_success<VertexSet>(masks.size(), ctx, attempt);
}

}  // namespace motif::detail
