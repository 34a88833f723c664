#include <algorithm>

#include "internal.hpp"
#include "motif/estimators.hpp"

namespace motif::detail {

namespace {

// Solutions meeting one independent class only: X is a vertex cover of
// G[X ∪ S_i].
Witness inside_one_class(const Instance& inst, const VertexSet& x, const VertexSet& cls, const ExecutionContext& ctx) {
  VertexSet keep = x;
  keep.insert(keep.end(), cls.begin(), cls.end());
  const RestrictedInstance sub = restrict_to(inst, keep);
  Witness w = vertex_cover_core(sub.instance, restrict_set(x, sub), ctx);
  if (!w) return std::nullopt;
  return sub.lift(*w);
}

// Solutions containing s and t from two different classes. Every vertex
// outside X is adjacent to s or to t, so s and t are replaced by one hub h,
// colored fresh and adjacent to all of V∖X and to the X-neighbors of s and
// t, and V∖X∖{s,t} ∪ {h} is completed to a clique.
Witness across_classes(const Instance& inst, const VertexSet& x, Vertex s, Vertex t, const ExecutionContext& ctx) {
  const Graph& g = inst.graph;
  const std::size_t n = g.size();
  Motif rest = inst.motif;
  rest.remove(inst.colors[s]);
  rest.remove(inst.colors[t]);
  if (rest.empty()) return VertexSet{std::min(s, t), std::max(s, t)};

  std::vector<Vertex> old_of;
  std::vector<Vertex> new_of(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    new_of[v] = static_cast<Vertex>(old_of.size());
    old_of.push_back(v);
  }
  const Vertex hub = static_cast<Vertex>(old_of.size());
  GraphBuilder b(old_of.size() + 1);
  for (auto [u, v] : g.edges()) {
    if (new_of[u] != kNoVertex && new_of[v] != kNoVertex) b.add_edge(new_of[u], new_of[v]);
  }
  std::vector<Vertex> clique_side;
  for (Vertex v = 0; v < n; ++v) {
    if (new_of[v] != kNoVertex && !contains(x, v)) clique_side.push_back(new_of[v]);
  }
  clique_side.push_back(hub);
  for (std::size_t i = 0; i < clique_side.size(); ++i) {
    for (std::size_t j = i + 1; j < clique_side.size(); ++j) b.add_edge(clique_side[i], clique_side[j]);
  }
  for (Vertex v : x) {
    if (g.adjacent(v, s) || g.adjacent(v, t)) b.add_edge(new_of[v], hub);
  }

  Instance completed;
  completed.graph = b.build();
  for (Vertex v : old_of) completed.colors.push_back(inst.colors[v]);
  const Color gamma = inst.motif.color_bound();
  completed.colors.push_back(gamma);
  completed.motif = rest;
  completed.motif.add(gamma);

  VertexSet deletion;
  for (Vertex v : x) deletion.push_back(new_of[v]);
  std::sort(deletion.begin(), deletion.end());
  Witness w = dist_clique_core(completed, deletion, ctx);
  if (!w) return std::nullopt;
  VertexSet r{s, t};
  for (Vertex v : *w) {
    if (v != hub) r.push_back(old_of[v]);
  }
  std::sort(r.begin(), r.end());
  if (!verify_solution(inst, r)) return std::nullopt;
  return r;
}

}  // namespace

Witness co_cluster_core(const Instance& inst, const VertexSet& deletion, const ExecutionContext& ctx) {
  const Graph& g = inst.graph;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!contains(deletion, v)) rest.push_back(v);
  }
  const auto classes = co_cluster_classes(g, rest);
  ExecutionContext inner = ctx;
  inner.mode = Execution::serial;

  if (classes.empty()) return inside_one_class(inst, deletion, {}, ctx);
  for (const auto& cls : classes) {
    if (Witness w = inside_one_class(inst, deletion, cls, ctx)) return w;
  }

  std::vector<std::size_t> class_of(g.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Vertex v : classes[i]) class_of[v] = i;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      const Vertex s = rest[i];
      const Vertex t = rest[j];
      if (class_of[s] == class_of[t]) continue;
      Motif st;
      st.add(inst.colors[s]);
      st.add(inst.colors[t]);
      if (st.subset_of(inst.motif)) pairs.emplace_back(s, t);
    }
  }
  return first_success<VertexSet>(pairs.size(), ctx, [&](std::size_t i) {
    return across_classes(inst, deletion, pairs[i].first, pairs[i].second, inner);
  });
}

}  // namespace motif::detail
