#include <algorithm>
#include <stdexcept>

#include "common.hpp"
#include "motif/errors.hpp"

namespace motif {

GeneratedInstance gen_domset_gadget(const Instance& inst, Vertex root) {
  inst.validate();
  const std::size_t n = inst.graph.size();
  if (root >= n) throw InputError("gadget root out of range");
  Color x = inst.motif.color_bound();
  for (Color c : inst.colors) x = std::max(x, c + 1);
  const Color y = x + 1;

  detail::Builder b;
  for (Vertex v = 0; v < n; ++v) b.add(inst.colors[v]);
  for (auto [u, v] : inst.graph.edges()) b.edge(u, v);
  const Vertex u = b.add(x);
  for (Vertex v = 0; v < n; ++v) b.edge(u, v);
  const Vertex t = b.add_after(root, x);
  const Vertex s = b.add_after(t, y);

  Motif m = inst.motif;
  m.add(x);
  m.add(y);
  GeneratedInstance out;
  out.instance = b.finish(std::move(m));
  out.certificate = {{"root", root}, {"u", u}, {"t", t}, {"s", s}};
  if (!is_dominating_set(out.instance.graph, {u, t})) throw std::logic_error("domset-gadget: {u, t} must dominate");
  out.claims.emplace_back("dominating-set", "2");
  return out;
}

GeneratedInstance gen_domset_reduction(const DomsetSource& source, DomsetVariant variant) {
  const Graph& h = source.graph;
  const std::size_t n = h.size();
  const std::size_t t = std::min(source.budget, n);
  if (t == 0) throw InputError("dominating set reduction needs a positive budget and a nonempty graph");
  const Color special = static_cast<Color>(n);

  detail::Builder b;
  const Vertex hub = b.add(special);
  GeneratedInstance out;
  out.certificate.emplace_back("hub", hub);
  std::vector<VertexSet> partition{{hub}};
  for (Vertex v = 0; v < n; ++v) {
    const Vertex center = b.add(special);
    b.edge(hub, center);
    VertexSet part{center};
    std::vector<Vertex> closed(h.neighbors(v).begin(), h.neighbors(v).end());
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    for (Vertex w : closed) {
      const Vertex x = b.add(static_cast<Color>(w));
      if (variant == DomsetVariant::tree) b.edge(center, x);
      part.push_back(x);
    }
    if (variant == DomsetVariant::cluster) b.clique(part);
    out.certificate.emplace_back("vertex:" + std::to_string(v), center);
    partition.push_back(std::move(part));
  }
  Motif m;
  m.add(special, static_cast<std::uint32_t>(t + 1));
  for (Vertex v = 0; v < n; ++v) m.add(static_cast<Color>(v));
  out.instance = b.finish(std::move(m));

  const Graph& g = out.instance.graph;
  if (variant == DomsetVariant::cluster) {
    if (!removal_leaves_cluster(g, hub)) throw std::logic_error("domset-reduction: hub removal must leave cliques");
    out.claims.emplace_back("distance-to-cluster", "1");
    out.vertex_clique_cover = std::move(partition);
  } else {
    if (g.edge_count() + 1 != g.size() || connected_components(g).size() != 1) {
      throw std::logic_error("domset-reduction: tree variant must be a tree");
    }
    out.claims.emplace_back("tree", "1");
  }
  if (t != source.budget) out.warnings.push_back("budget clamped to " + std::to_string(t));
  return out;
}

GeneratedInstance gen_hitting_set_split(const SetSystem& s) {
  s.validate();
  const std::size_t n = s.universe;
  const std::size_t m = s.sets.size();
  const std::size_t t = std::min(s.budget, n);
  if (t == 0 && m <= 1) throw InputError("degenerate hitting set: budget 0 with at most one set");
  detail::Builder b;
  VertexSet elements;
  for (std::size_t e = 0; e < n; ++e) elements.push_back(b.add(0));
  b.clique(elements);
  GeneratedInstance out;
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex v = b.add(1);
    for (auto e : s.sets[i]) b.edge(elements[e], v);
    out.certificate.emplace_back("set:" + std::to_string(i), v);
  }
  for (std::size_t e = 0; e < n; ++e) out.certificate.emplace_back("element:" + std::to_string(e), elements[e]);
  Motif motif;
  motif.add(0, static_cast<std::uint32_t>(t));
  motif.add(1, static_cast<std::uint32_t>(m));
  out.instance = b.finish(std::move(motif));
  if (!is_split_with_clique(out.instance.graph, elements)) throw std::logic_error("hitting-set-split: not a split graph");
  out.claims.emplace_back("vertex-cover-witness", std::to_string(n));
  if (t != s.budget) out.warnings.push_back("budget clamped to " + std::to_string(t));
  return out;
}

GeneratedInstance gen_set_cover_split(const SetSystem& s) {
  s.validate();
  const std::size_t n = s.universe;
  const std::size_t m = s.sets.size();
  const std::size_t t = std::min(s.budget, m);
  if (t == 0 && n <= 1) throw InputError("degenerate set cover: budget 0 with at most one element");
  detail::Builder b;
  VertexSet elements;
  for (std::size_t e = 0; e < n; ++e) elements.push_back(b.add(0));
  VertexSet sets;
  GeneratedInstance out;
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex v = b.add(1);
    for (auto e : s.sets[i]) b.edge(elements[e], v);
    sets.push_back(v);
    out.certificate.emplace_back("set:" + std::to_string(i), v);
  }
  b.clique(sets);
  for (std::size_t e = 0; e < n; ++e) out.certificate.emplace_back("element:" + std::to_string(e), elements[e]);
  Motif motif;
  motif.add(0, static_cast<std::uint32_t>(n));
  motif.add(1, static_cast<std::uint32_t>(t));
  out.instance = b.finish(std::move(motif));
  if (!is_split_with_clique(out.instance.graph, sets)) throw std::logic_error("set-cover-split: not a split graph");
  out.claims.emplace_back("distance-to-clique-witness", std::to_string(n));
  if (t != s.budget) out.warnings.push_back("budget clamped to " + std::to_string(t));
  return out;
}

}  // namespace motif
