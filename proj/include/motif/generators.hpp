#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motif/instance.hpp"

namespace motif {

// Source problems. Element, vertex and set ids are 0-based throughout.

/// Exact cover by 3-sets over {0..3q-1}.
struct X3cInstance {
  std::size_t q = 0;
  std::vector<std::array<std::uint32_t, 3>> triples;

  /// InputError on q == 0, out-of-range or repeated elements in a triple.
  void validate() const;
};

/// Set family over {0..universe-1} with a budget (hitting set or set cover).
struct SetSystem {
  std::size_t universe = 0;
  std::vector<std::vector<std::uint32_t>> sets;
  std::size_t budget = 0;

  void validate() const;
};

/// k classes of t vertices each; vertex i*t + q is the q-th vertex of class
/// i. With a pattern, only the listed class pairs (i < j) are encoded.
struct PartitionedGraph {
  std::size_t k = 0;
  std::size_t t = 0;
  std::vector<Edge> edges;
  std::optional<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pattern;

  std::size_t class_of(Vertex v) const { return v / t; }
  /// InputError on k < 2, t == 0, out-of-range ids, edges inside a class or
  /// outside the pattern, malformed pattern pairs.
  void validate() const;
};

/// Dominating-set source: a simple graph and a budget.
struct DomsetSource {
  Graph graph;
  std::size_t budget = 0;
};

struct GeneratedInstance {
  Instance instance;
  std::vector<std::pair<std::string, Vertex>> certificate;   // source token -> vertex
  std::vector<std::pair<std::string, std::string>> claims;   // parameter -> value
  std::vector<std::string> warnings;
  std::optional<std::vector<VertexSet>> vertex_clique_cover;  // when the construction has one
};

/// Sidecar lines: `map <token> <vertex>`, `claim <parameter> <value>`,
/// `warning <text>`.
void write_certificate(std::ostream& out, const GeneratedInstance& g);

/// Root plus two paths per set: a1, the three elements, b1; and a2, b2.
/// Colorful motif of all colors.
GeneratedInstance gen_x3c_paths(const X3cInstance& x3c);

/// Same teeth hung off a spine r_1^1 r_1^2 r_2^1 ... with fresh spine
/// colors. Vertex ids number the comb tooth by tooth.
GeneratedInstance gen_x3c_comb(const X3cInstance& x3c);

/// Root joined to one clique per set. The colorful form puts q set vertices
/// with the q set colors into each clique (size |S_i| + q); the multiset form
/// uses one set vertex (size |S_i| + 1) whose color has multiplicity q.
GeneratedInstance gen_x3c_superstar_cliques(const X3cInstance& x3c, bool colorful = true);

/// Universal vertex u and a pendant path r - t - s, with c(t) = c(u) = x and
/// c(s) = y for two fresh colors; motif M + {x, y}.
GeneratedInstance gen_domset_gadget(const Instance& inst, Vertex root);

enum class DomsetVariant { cluster, tree };

/// One clique (or star) per vertex v of H on a special vertex and one vertex
/// of color c_w per w in N[v]; hub z joined to every special vertex. Motif:
/// special color t+1 times, every c_v once. Budget 0 is rejected; budgets
/// above |V(H)| are clamped.
GeneratedInstance gen_domset_reduction(const DomsetSource& source, DomsetVariant variant);

/// Element vertices form a clique (color 0), set vertices an independent set
/// (color 1); motif {t x 0, m x 1}. The budget is clamped to the universe.
GeneratedInstance gen_hitting_set_split(const SetSystem& s);

/// Set vertices form a clique (color 1), element vertices an independent set
/// (color 0); motif {n x 0, t x 1}. The budget is clamped to the family size.
GeneratedInstance gen_set_cover_split(const SetSystem& s);

/// Subdivided star: center (color 0), a path of 2s alternating begin/end
/// vertices (colors 1/2), per class a path of t-1 equal blocks, per encoded
/// class pair a path of blocks whose sizes spell the pair's edges. Pair
/// colors are 3 + the pair's index in lexicographic order.
GeneratedInstance gen_mcc_star(const PartitionedGraph& p);

/// OR composition of X3C instances with equal q and family
/// size: independent roots r_i (color 0), one node per 3-subset of the
/// universe (color 1), element nodes (color 2); motif {1, q x 1, 3q x 2}.
/// The colorful form copies each subset node q times with colors 0..q-1,
/// gives the elements colors q..4q-1 and the roots color 4q.
GeneratedInstance gen_or_composition(const std::vector<X3cInstance>& sources, bool colorful = false);

// Structural checks used for the generation-time claims.

/// G - v is a disjoint union of paths.
bool removal_leaves_paths(const Graph& g, Vertex v);
/// G - v is a disjoint union of cliques.
bool removal_leaves_cluster(const Graph& g, Vertex v);
/// Largest |u - v| over the edges.
std::size_t numbering_gap(const Graph& g);
bool is_dominating_set(const Graph& g, const VertexSet& s);
/// `clique_side` is a clique, every other vertex is in an independent set.
bool is_split_with_clique(const Graph& g, const VertexSet& clique_side);
/// Every path leaving `center` reads, from the center outwards, as a
/// sequence of blocks: a begin color, non-begin/end colors, an end color.
bool has_block_tiling(const Instance& inst, Vertex center, Color begin, Color end);
/// Vertices of degree one.
std::size_t leaf_count(const Graph& g);

// Source file grammars (lines, `#` comments):
//   x3c <q> <num>   then num lines `t a b c`; several blocks may follow
//   sets <n> <m> <t> then m lines `s e1 e2 ...`
//   pg <k> <t> <m>  then m lines `e u v`, optional `p i j` pattern lines
//   g <n> <m> <t>   then m lines `e u v`
std::vector<X3cInstance> read_x3c_sources(std::istream& in);
SetSystem read_set_system(std::istream& in);
PartitionedGraph read_partitioned_graph(std::istream& in);
DomsetSource read_domset_source(std::istream& in);

}  // namespace motif
