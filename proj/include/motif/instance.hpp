#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "motif/graph.hpp"
#include "motif/motif.hpp"

namespace motif {

using Coloring = std::vector<Color>;

/// A Graph Motif instance: graph, vertex coloring and motif.
struct Instance {
  Graph graph;
  Coloring colors;
  Motif motif;

  /// Throws InputError when the coloring length is wrong or the motif is empty.
  void validate() const;

  Color color(Vertex v) const { return colors[v]; }
};

/// Answer of a solver: either No, or Yes with a sorted witness.
class SolveOutcome {
 public:
  static SolveOutcome no() { return SolveOutcome{}; }
  static SolveOutcome yes(VertexSet witness);

  bool is_yes() const { return witness_.has_value(); }
  explicit operator bool() const { return is_yes(); }
  const VertexSet& witness() const { return *witness_; }

  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;

 private:
  std::optional<VertexSet> witness_;
};

enum class Violation {
  none,
  empty,
  duplicate,
  connectivity,
  multiset,
};

std::string_view to_string(Violation v);

/// Detailed check of a candidate solution. Out-of-range ids raise InputError.
/// The multiset condition is checked before connectivity.
Violation check_solution(const Instance& inst, std::span<const Vertex> r);

/// True iff r is nonempty, G[r] is connected and c(r) equals the motif.
bool verify_solution(const Instance& inst, std::span<const Vertex> r);

/// Sub-instance together with the id maps relating it to its parent.
struct RestrictedInstance {
  Instance instance;
  std::vector<Vertex> to_parent;    // new id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> new id, kNoVertex when dropped

  VertexSet lift(std::span<const Vertex> r) const;
};

/// Instance induced on `vertices` (any order; ids are assigned in sorted order).
RestrictedInstance restrict_to(const Instance& inst, std::span<const Vertex> vertices);

/// Drops every vertex whose color is absent from the motif.
RestrictedInstance prune_wrong_colors(const Instance& inst);

}  // namespace motif
