#include <gtest/gtest.h>

#include <sstream>

#include "motif/errors.hpp"
#include "motif/io.hpp"
#include "random_instances.hpp"

namespace motif {
namespace {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

TEST(Graph, FromEdgesMergesDuplicates) {
  const std::vector<Edge> e{{0, 1}, {1, 0}, {1, 2}};
  const Graph g = Graph::from_edges(3, e);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), InputError);
  const std::vector<Edge> far{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, far), InputError);
}

TEST(Graph, ComponentsAndComplement) {
  const std::vector<Edge> e{{0, 1}, {2, 3}};
  const Graph g = Graph::from_edges(5, e);
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[1], (VertexSet{2, 3}));
  const VertexSet s{0, 1};
  EXPECT_TRUE(is_connected(g, s));
  EXPECT_TRUE(is_clique(g, s));
  EXPECT_EQ(g.complement().edge_count(), 10u - 2u);
  EXPECT_EQ(path(4).induced(std::vector<Vertex>{3, 2}).edge_count(), 1u);
}

TEST(Motif, Algebra) {
  Motif a;
  a.add(0, 2);
  a.add(3);
  Motif b;
  b.add(0);
  EXPECT_TRUE(b.subset_of(a));
  EXPECT_FALSE(a.subset_of(b));
  const Motif d = a - b;
  EXPECT_EQ(d.multiplicity(0), 1u);
  EXPECT_EQ(d.total(), 2u);
  EXPECT_EQ((b - a).total(), 0u);
  EXPECT_EQ((a + b).multiplicity(0), 3u);
  Motif c = a;
  c.remove(3);
  EXPECT_EQ(c.color_bound(), 1u);  // trailing zeros trimmed
  Motif e;
  e.add(0, 2);
  EXPECT_EQ(c, e);
  EXPECT_EQ(a.distinct(), 2u);
  EXPECT_EQ(a.expand(), (std::vector<Color>{0, 0, 3}));
}

Instance triangle_plus_pendant() {
  Instance inst;
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  inst.graph = Graph::from_edges(4, e);
  inst.colors = {0, 1, 1, 2};
  inst.motif.add(1);
  inst.motif.add(2);
  return inst;
}

TEST(Instance, CheckSolution) {
  const Instance inst = triangle_plus_pendant();
  EXPECT_EQ(check_solution(inst, std::vector<Vertex>{2, 3}), Violation::none);
  EXPECT_EQ(check_solution(inst, std::vector<Vertex>{1, 3}), Violation::connectivity);
  EXPECT_EQ(check_solution(inst, std::vector<Vertex>{0, 3}), Violation::multiset);
  EXPECT_EQ(check_solution(inst, std::vector<Vertex>{}), Violation::empty);
  EXPECT_EQ(check_solution(inst, std::vector<Vertex>{3, 3}), Violation::duplicate);
  EXPECT_THROW(check_solution(inst, std::vector<Vertex>{9}), InputError);
  EXPECT_TRUE(verify_solution(inst, std::vector<Vertex>{3, 2}));
}

TEST(Instance, ValidateAndRestrict) {
  Instance inst = triangle_plus_pendant();
  const RestrictedInstance pruned = prune_wrong_colors(inst);
  EXPECT_EQ(pruned.instance.graph.size(), 3u);
  EXPECT_EQ(pruned.lift(std::vector<Vertex>{0}), (VertexSet{1}));
  EXPECT_EQ(pruned.from_parent[0], kNoVertex);
  inst.colors.pop_back();
  EXPECT_THROW(inst.validate(), InputError);
  inst = triangle_plus_pendant();
  inst.motif = Motif{};
  EXPECT_THROW(inst.validate(), InputError);
}

TEST(Io, RoundTrip) {
  testing::Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const Instance inst = testing::random_instance(rng);
    std::stringstream ss;
    write_instance(ss, inst);
    const Instance back = read_instance(ss);
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.motif.total(), inst.motif.total());
    // Colors may be renumbered densely, but the partition into classes stays.
    for (Vertex u = 0; u < inst.graph.size(); ++u) {
      for (Vertex v = 0; v < inst.graph.size(); ++v) {
        EXPECT_EQ(back.colors[u] == back.colors[v], inst.colors[u] == inst.colors[v]);
      }
    }
  }
}

TEST(Io, SparseColorsAreDensified) {
  std::istringstream in("# comment\np gm 2 1\ne 0 1\nc 0 70\nc 1 5\nm 70 1\nm 5 1\n");
  const Instance inst = read_instance(in);
  EXPECT_EQ(inst.colors, (Coloring{1, 0}));
  EXPECT_TRUE(verify_solution(inst, std::vector<Vertex>{0, 1}));
}

TEST(Io, Errors) {
  const char* bad[] = {
      "e 0 1\n",                                  // before header
      "p gm 2 1\ne 0 2\nc 0 0\nc 1 0\nm 0 1\n",   // endpoint out of range
      "p gm 2 1\ne 0 0\nc 0 0\nc 1 0\nm 0 1\n",   // self-loop
      "p gm 2 0\nc 0 0\nm 0 1\n",                 // uncolored vertex
      "p gm 1 0\nc 0 0\nm 0 0\n",                 // zero multiplicity
      "p gm 1 0\nc 0 x\nm 0 1\n",                 // not a number
      "p gm 1 1\nc 0 0\nm 0 1\n",                 // edge count mismatch
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    EXPECT_THROW(read_instance(in), InputError) << text;
  }
}

TEST(Io, WitnessAndCliques) {
  std::istringstream w("YES\n3 1 2\n");
  EXPECT_EQ(read_witness(w), (VertexSet{3, 1, 2}));  // file order kept
  std::istringstream c("0 1\n2\n");
  const auto cl = read_cliques(c);
  ASSERT_EQ(cl.size(), 2u);
  std::ostringstream out;
  write_cliques(out, cl);
  EXPECT_EQ(out.str(), "0 1\n2\n");
}

}  // namespace
}  // namespace motif
