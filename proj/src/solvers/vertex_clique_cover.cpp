#include <algorithm>
#include <map>

#include "internal.hpp"
#include "motif/combinatorics.hpp"
#include "motif/matching.hpp"

namespace motif::detail {

namespace {

constexpr Color kUnset = static_cast<Color>(-1);

// Color graph of one clique pair: left colors of clique a, right colors of
// clique b, an edge when some vertices of those colors are adjacent.
struct ColorGraph {
  std::vector<Color> left;
  std::vector<Color> right;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool has(Color c, Color d) const {
    for (auto [i, j] : edges) {
      if (left[i] == c && right[j] == d) return true;
    }
    return false;
  }
};

struct Class {
  std::size_t clique;            // index into the chosen cliques
  std::vector<std::size_t> edges;  // incident tree edges
};

struct TreeEdge {
  std::size_t a, b;         // chosen-clique indices
  std::size_t x, y;         // classes of the endpoints in a and b
  const ColorGraph* colors; // a on the left
};

class Realizer {
 public:
  Realizer(const Instance& inst, const std::vector<const VertexSet*>& cliques, std::vector<Class> classes,
           std::vector<TreeEdge> edges, std::size_t kp)
      : inst_(inst), cliques_(cliques), classes_(std::move(classes)), edges_(std::move(edges)), kp_(kp) {
    color_.assign(classes_.size(), kUnset);
    domain_.resize(classes_.size());
    for (std::size_t x = 0; x < classes_.size(); ++x) {
      std::vector<Color> dom;
      bool first = true;
      for (std::size_t e : classes_[x].edges) {
        const TreeEdge& te = edges_[e];
        std::vector<Color> side;
        for (auto [i, j] : te.colors->edges) side.push_back(te.x == x ? te.colors->left[i] : te.colors->right[j]);
        std::sort(side.begin(), side.end());
        side.erase(std::unique(side.begin(), side.end()), side.end());
        if (first) {
          dom = std::move(side);
          first = false;
        } else {
          std::vector<Color> both;
          std::set_intersection(dom.begin(), dom.end(), side.begin(), side.end(), std::back_inserter(both));
          dom = std::move(both);
        }
      }
      domain_[x] = std::move(dom);
    }
    remaining_ = inst.motif;
  }

  Witness run() {
    for (const auto& d : domain_) {
      if (d.empty()) return std::nullopt;
    }
    if (branch(0)) return result_;
    return std::nullopt;
  }

 private:
  bool can_assign(std::size_t x, Color c) const {
    return remaining_.multiplicity(c) > 0 && std::binary_search(domain_[x].begin(), domain_[x].end(), c);
  }

  void assign(std::size_t x, Color c) {
    color_[x] = c;
    remaining_.remove(c);
  }

  void unassign(std::size_t x) {
    remaining_.add(color_[x]);
    color_[x] = kUnset;
  }

  bool edge_ok(const TreeEdge& te) const {
    if (color_[te.x] == kUnset || color_[te.y] == kUnset) return true;
    return te.colors->has(color_[te.x], color_[te.y]);
  }

  // Walks the tree edges. An edge whose color graph has a small vertex cover
  // branches on the cover colors; otherwise it is left for the final pass.
  bool branch(std::size_t e) {
    if (e == edges_.size()) return assign_free(0);
    const TreeEdge& te = edges_[e];
    const bool fx = color_[te.x] != kUnset;
    const bool fy = color_[te.y] != kUnset;
    if (fx && fy) return edge_ok(te) && branch(e + 1);
    if (fx || fy) {
      const std::size_t other = fx ? te.y : te.x;
      for (auto [i, j] : te.colors->edges) {
        const Color fixed = fx ? te.colors->left[i] : te.colors->right[j];
        const Color c = fx ? te.colors->right[j] : te.colors->left[i];
        if (fixed != color_[fx ? te.x : te.y] || !can_assign(other, c)) continue;
        assign(other, c);
        if (branch(e + 1)) return true;
        unassign(other);
      }
      return false;
    }

    BipartiteGraph b;
    b.left = te.colors->left.size();
    b.right = te.colors->right.size();
    for (auto [i, j] : te.colors->edges) {
      if (can_assign(te.x, te.colors->left[i]) && can_assign(te.y, te.colors->right[j])) b.edges.emplace_back(i, j);
    }
    if (b.edges.empty()) return false;
    const MatchingResult m = max_matching_with_cover(b);
    if (m.cover_size() + 4 > 2 * kp_) {
      // Abundant: more usable color pairs than the rest of the tree can block.
      return branch(e + 1);
    }
    for (std::size_t i : m.left_cover) {
      const Color c = te.colors->left[i];
      if (!can_assign(te.x, c)) continue;
      assign(te.x, c);
      if (branch(e)) return true;
      unassign(te.x);
    }
    for (std::size_t j : m.right_cover) {
      const Color c = te.colors->right[j];
      if (!can_assign(te.y, c)) continue;
      assign(te.y, c);
      if (branch(e)) return true;
      unassign(te.y);
    }
    return false;
  }

  bool assign_free(std::size_t x) {
    while (x < classes_.size() && color_[x] != kUnset) ++x;
    if (x == classes_.size()) return realize();
    for (Color c : domain_[x]) {
      if (!can_assign(x, c)) continue;
      assign(x, c);
      bool ok = std::all_of(classes_[x].edges.begin(), classes_[x].edges.end(),
                            [&](std::size_t e) { return edge_ok(edges_[e]); });
      if (ok && assign_free(x + 1)) return true;
      unassign(x);
    }
    return false;
  }

  // Bottom-up sets of feasible vertices per class on the class forest, then
  // top-down extraction of the smallest ids.
  bool realize() {
    const std::size_t nc = classes_.size();
    std::vector<std::vector<std::size_t>> nbr(nc);
    for (const auto& te : edges_) {
      nbr[te.x].push_back(te.y);
      nbr[te.y].push_back(te.x);
    }
    std::vector<std::size_t> parent(nc, nc), order;
    std::vector<char> seen(nc, 0);
    for (std::size_t root = 0; root < nc; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::size_t head = order.size();
      order.push_back(root);
      while (head < order.size()) {
        std::size_t x = order[head++];
        for (std::size_t y : nbr[x]) {
          if (!seen[y]) {
            seen[y] = 1;
            parent[y] = x;
            order.push_back(y);
          }
        }
      }
    }
    std::vector<VertexSet> feasible(nc);
    for (std::size_t x = 0; x < nc; ++x) {
      for (Vertex v : *cliques_[classes_[x].clique]) {
        if (inst_.colors[v] == color_[x]) feasible[x].push_back(v);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t x = *it;
      VertexSet keep;
      for (Vertex v : feasible[x]) {
        bool ok = true;
        for (std::size_t y : nbr[x]) {
          if (parent[y] != x) continue;
          ok = std::any_of(feasible[y].begin(), feasible[y].end(), [&](Vertex u) { return inst_.graph.adjacent(u, v); });
          if (!ok) break;
        }
        if (ok) keep.push_back(v);
      }
      if (keep.empty()) return false;
      feasible[x] = std::move(keep);
    }
    std::vector<Vertex> pick(nc, kNoVertex);
    for (std::size_t x : order) {
      if (parent[x] == nc) {
        pick[x] = feasible[x].front();
      } else {
        for (Vertex u : feasible[x]) {
          if (inst_.graph.adjacent(u, pick[parent[x]])) {
            pick[x] = u;
            break;
          }
        }
      }
    }
    VertexSet r(pick.begin(), pick.end());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    VertexSet pool;
    for (const VertexSet* q : cliques_) pool.insert(pool.end(), q->begin(), q->end());
    std::sort(pool.begin(), pool.end());
    const Motif need = inst_.motif - colors_of(inst_.colors, r);
    if (!complete_from(inst_, r, pool, need)) return false;
    if (!verify_solution(inst_, r)) return false;
    result_ = std::move(r);
    return true;
  }

  const Instance& inst_;
  const std::vector<const VertexSet*>& cliques_;
  std::vector<Class> classes_;
  std::vector<TreeEdge> edges_;
  std::size_t kp_;
  std::vector<Color> color_;
  std::vector<std::vector<Color>> domain_;
  Motif remaining_;
  VertexSet result_;
};

ColorGraph build_color_graph(const Instance& inst, const VertexSet& a, const VertexSet& b) {
  ColorGraph cg;
  std::map<std::pair<Color, Color>, bool> pairs;
  for (Vertex u : a) {
    for (Vertex w : b) {
      if (!inst.graph.adjacent(u, w)) continue;
      const Color c = inst.colors[u];
      const Color d = inst.colors[w];
      if (inst.motif.multiplicity(c) == 0 || inst.motif.multiplicity(d) == 0) continue;
      // Both endpoints would need the one copy of that color.
      if (c == d && inst.motif.multiplicity(c) == 1) continue;
      pairs[{c, d}] = true;
    }
  }
  for (const auto& [p, unused] : pairs) {
    cg.left.push_back(p.first);
    cg.right.push_back(p.second);
  }
  std::sort(cg.left.begin(), cg.left.end());
  cg.left.erase(std::unique(cg.left.begin(), cg.left.end()), cg.left.end());
  std::sort(cg.right.begin(), cg.right.end());
  cg.right.erase(std::unique(cg.right.begin(), cg.right.end()), cg.right.end());
  for (const auto& [p, unused] : pairs) {
    const auto i = std::lower_bound(cg.left.begin(), cg.left.end(), p.first) - cg.left.begin();
    const auto j = std::lower_bound(cg.right.begin(), cg.right.end(), p.second) - cg.right.begin();
    cg.edges.emplace_back(i, j);
  }
  return cg;
}

// One guess of touched cliques: every tree on them, every identification of
// endpoints inside each clique.
Witness solve_guess(const Instance& inst, const std::vector<VertexSet>& partition, const std::vector<std::size_t>& chosen,
                    const ExecutionContext& ctx) {
  const std::size_t kp = chosen.size();
  const std::size_t total = inst.motif.total();
  std::vector<const VertexSet*> cliques;
  for (std::size_t i : chosen) cliques.push_back(&partition[i]);

  std::map<std::pair<std::size_t, std::size_t>, ColorGraph> graphs;
  auto color_graph = [&](std::size_t a, std::size_t b) -> const ColorGraph& {
    auto it = graphs.find({a, b});
    if (it == graphs.end()) it = graphs.emplace(std::make_pair(a, b), build_color_graph(inst, *cliques[a], *cliques[b])).first;
    return it->second;
  };

  Witness found;
  for_each_labeled_tree(kp, [&](std::span<const Edge> tree) {
    for (auto [a, b] : tree) {
      if (color_graph(a, b).edges.empty()) return true;
    }
    ctx.budget.check();
    // Endpoint slots: 2e in clique a, 2e+1 in clique b.
    std::vector<std::vector<std::size_t>> slots(kp);
    for (std::size_t e = 0; e < tree.size(); ++e) {
      slots[tree[e].first].push_back(2 * e);
      slots[tree[e].second].push_back(2 * e + 1);
    }
    std::vector<std::size_t> slot_class(2 * tree.size());
    std::vector<Class> classes;

    // Identification partitions clique by clique.
    std::function<bool(std::size_t)> per_clique = [&](std::size_t q) -> bool {
      if (q == kp) {
        std::vector<TreeEdge> edges;
        std::vector<Class> cls = classes;
        for (std::size_t e = 0; e < tree.size(); ++e) {
          TreeEdge te{tree[e].first, tree[e].second, slot_class[2 * e], slot_class[2 * e + 1],
                      &color_graph(tree[e].first, tree[e].second)};
          cls[te.x].edges.push_back(e);
          cls[te.y].edges.push_back(e);
          edges.push_back(te);
        }
        Realizer r(inst, cliques, std::move(cls), std::move(edges), kp);
        found = r.run();
        return !found.has_value();
      }
      const auto& s = slots[q];
      return for_each_set_partition(s.size(), [&](std::span<const std::uint32_t> rgs, std::size_t blocks) {
        if (classes.size() + blocks > total || blocks > cliques[q]->size()) return true;
        const std::size_t base = classes.size();
        for (std::size_t b = 0; b < blocks; ++b) classes.push_back({q, {}});
        for (std::size_t i = 0; i < s.size(); ++i) slot_class[s[i]] = base + rgs[i];
        const bool cont = per_clique(q + 1);
        classes.resize(base);
        return cont;
      });
    };
    return per_clique(0);
  });
  return found;
}

}  // namespace

Witness vertex_clique_cover_core(const Instance& inst, const std::vector<VertexSet>& partition,
                                 const ExecutionContext& ctx) {
  const std::size_t k = partition.size();
  check_parameter(k, 24, "vertex clique cover");
  const std::size_t total = inst.motif.total();
  const auto masks = masks_by_cardinality(k);

  auto attempt = [&](std::size_t index) -> Witness {
    const std::uint64_t mask = masks[index];
    const auto chosen = mask_members(mask);
    if (chosen.empty() || chosen.size() > total) return std::nullopt;
    VertexSet pool;
    for (std::size_t i : chosen) pool.insert(pool.end(), partition[i].begin(), partition[i].end());
    std::sort(pool.begin(), pool.end());
    if (!inst.motif.subset_of(colors_of(inst.colors, pool))) return std::nullopt;
    if (chosen.size() == 1) {
      VertexSet r;
      if (complete_from(inst, r, pool, inst.motif)) return r;
      return std::nullopt;
    }
    // The touched cliques must be connected through transversal edges.
    if (!is_connected(inst.graph, pool)) return std::nullopt;
    return solve_guess(inst, partition, chosen, ctx);
  };

  return first_success<VertexSet>(masks.size(), ctx, attempt);
}

}  // namespace motif::detail
