#include "motif/instance.hpp"

#include <algorithm>
#include <string>

#include "motif/errors.hpp"

namespace motif {

void Instance::validate() const {
  if (colors.size() != graph.size()) {
    throw InputError("coloring has " + std::to_string(colors.size()) + " entries for " +
                     std::to_string(graph.size()) + " vertices");
  }
  if (motif.empty()) throw InputError("empty motif");
}

SolveOutcome SolveOutcome::yes(VertexSet witness) {
  std::sort(witness.begin(), witness.end());
  SolveOutcome out;
  out.witness_ = std::move(witness);
  return out;
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::none: return "ok";
    case Violation::empty: return "empty";
    case Violation::duplicate: return "duplicate";
    case Violation::connectivity: return "connectivity";
    case Violation::multiset: return "multiset";
  }
  return "unknown";
}

Violation check_solution(const Instance& inst, std::span<const Vertex> r) {
  for (Vertex v : r) {
    if (v >= inst.graph.size()) throw InputError("vertex id out of range: " + std::to_string(v));
  }
  if (r.empty()) return Violation::empty;
  VertexSet sorted(r.begin(), r.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return Violation::duplicate;
  if (!(colors_of(inst.colors, sorted) == inst.motif)) return Violation::multiset;
  if (!is_connected(inst.graph, sorted)) return Violation::connectivity;
  return Violation::none;
}

bool verify_solution(const Instance& inst, std::span<const Vertex> r) {
  return check_solution(inst, r) == Violation::none;
}

VertexSet RestrictedInstance::lift(std::span<const Vertex> r) const {
  VertexSet out;
  out.reserve(r.size());
  for (Vertex v : r) out.push_back(to_parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

RestrictedInstance restrict_to(const Instance& inst, std::span<const Vertex> vertices) {
  RestrictedInstance out;
  out.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());
  out.from_parent.assign(inst.graph.size(), kNoVertex);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    out.from_parent[out.to_parent[i]] = static_cast<Vertex>(i);
  }
  out.instance.graph = inst.graph.induced(out.to_parent);
  out.instance.colors.reserve(out.to_parent.size());
  for (Vertex v : out.to_parent) out.instance.colors.push_back(inst.colors[v]);
  out.instance.motif = inst.motif;
  return out;
}

RestrictedInstance prune_wrong_colors(const Instance& inst) {
  VertexSet keep;
  for (Vertex v = 0; v < inst.graph.size(); ++v) {
    if (inst.motif.multiplicity(inst.colors[v]) > 0) keep.push_back(v);
  }
  return restrict_to(inst, keep);
}

}  // namespace motif
