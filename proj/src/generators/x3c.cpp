#include <algorithm>
#include <stdexcept>

#include "common.hpp"

namespace motif {

namespace {

struct Layout {
  std::size_t sets;
  std::size_t q;
  Color a(std::size_t i) const { return static_cast<Color>(i); }
  Color b(std::size_t i) const { return static_cast<Color>(sets + i); }
  Color element(std::uint32_t x) const { return static_cast<Color>(2 * sets + x); }
  Color after() const { return static_cast<Color>(2 * sets + 3 * q); }
};

std::array<std::uint32_t, 3> sorted(std::array<std::uint32_t, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Appends a1, the elements, b1 as a path; returns the id of a1.
Vertex add_long_tooth(detail::Builder& b, const Layout& lay, std::size_t i, const std::array<std::uint32_t, 3>& triple) {
  const Vertex a1 = b.add(lay.a(i));
  Vertex prev = a1;
  for (auto x : sorted(triple)) prev = b.add_after(prev, lay.element(x));
  b.add_after(prev, lay.b(i));
  return a1;
}

}  // namespace

GeneratedInstance gen_x3c_paths(const X3cInstance& x3c) {
  x3c.validate();
  const Layout lay{x3c.triples.size(), x3c.q};
  detail::Builder b;
  const Vertex root = b.add(lay.after());
  GeneratedInstance out;
  out.certificate.emplace_back("root", root);
  for (std::size_t i = 0; i < x3c.triples.size(); ++i) {
    const Vertex a1 = add_long_tooth(b, lay, i, x3c.triples[i]);
    b.edge(root, a1);
    const Vertex a2 = b.add(lay.a(i));
    b.add_after(a2, lay.b(i));
    b.edge(root, a2);
    out.certificate.emplace_back("set:" + std::to_string(i) + ":1", a1);
    out.certificate.emplace_back("set:" + std::to_string(i) + ":2", a2);
  }
  out.instance = b.finish_colorful();
  if (!removal_leaves_paths(out.instance.graph, root)) throw std::logic_error("x3c-paths: root removal must leave paths");
  out.claims.emplace_back("distance-to-disjoint-paths", "1");
  return out;
}

GeneratedInstance gen_x3c_comb(const X3cInstance& x3c) {
  x3c.validate();
  const Layout lay{x3c.triples.size(), x3c.q};
  detail::Builder b;
  GeneratedInstance out;
  Vertex last_spine = kNoVertex;
  for (std::size_t i = 0; i < x3c.triples.size(); ++i) {
    const Color spine = lay.after() + static_cast<Color>(2 * i);
    const Vertex r1 = b.add(spine);
    if (last_spine != kNoVertex) b.edge(last_spine, r1);
    const Vertex a1 = add_long_tooth(b, lay, i, x3c.triples[i]);
    b.edge(r1, a1);
    const Vertex r2 = b.add_after(r1, spine + 1);
    const Vertex a2 = b.add_after(r2, lay.a(i));
    b.add_after(a2, lay.b(i));
    last_spine = r2;
    const std::string s = std::to_string(i);
    out.certificate.emplace_back("spine:" + s + ":1", r1);
    out.certificate.emplace_back("spine:" + s + ":2", r2);
    out.certificate.emplace_back("set:" + s + ":1", a1);
    out.certificate.emplace_back("set:" + s + ":2", a2);
  }
  out.instance = b.finish_colorful();
  const std::size_t gap = numbering_gap(out.instance.graph);
  if (gap > 6) throw std::logic_error("x3c-comb: numbering gap exceeds 6");
  out.claims.emplace_back("bandwidth-witness", std::to_string(gap));
  return out;
}

GeneratedInstance gen_x3c_superstar_cliques(const X3cInstance& x3c, bool colorful) {
  x3c.validate();
  const std::size_t copies = colorful ? x3c.q : 1;
  const Color element_base = static_cast<Color>(copies);
  const Color root_color = element_base + static_cast<Color>(3 * x3c.q);
  detail::Builder b;
  const Vertex root = b.add(root_color);
  GeneratedInstance out;
  out.certificate.emplace_back("root", root);
  std::vector<VertexSet> partition{{root}};
  for (std::size_t i = 0; i < x3c.triples.size(); ++i) {
    VertexSet clique;
    for (std::size_t j = 0; j < copies; ++j) {
      const Vertex s = b.add(static_cast<Color>(j));
      b.edge(root, s);
      clique.push_back(s);
    }
    for (auto x : sorted(x3c.triples[i])) clique.push_back(b.add(element_base + x));
    b.clique(clique);
    out.certificate.emplace_back("set:" + std::to_string(i), clique.front());
    partition.push_back(std::move(clique));
  }
  out.instance = b.finish_colorful();
  if (!colorful) out.instance.motif.add(0, static_cast<std::uint32_t>(x3c.q - 1));
  if (!removal_leaves_cluster(out.instance.graph, root)) throw std::logic_error("x3c-superstar: root removal must leave cliques");
  out.claims.emplace_back("distance-to-cluster", "1");
  out.vertex_clique_cover = std::move(partition);
  return out;
}

}  // namespace motif
