#include <string>

#include "internal.hpp"
#include "motif/errors.hpp"

namespace motif {

namespace {

// Chooses multiplicity-many vertices of each motif color in turn and tests
// connectivity of every complete choice.
class BruteSearch {
 public:
  BruteSearch(const Instance& inst, const Budget& budget) : inst_(inst), budget_(budget) {
    for (auto [c, m] : inst.motif.entries()) {
      Group g;
      g.need = m;
      for (Vertex v = 0; v < inst.graph.size(); ++v) {
        if (inst.colors[v] == c) g.vertices.push_back(v);
      }
      groups_.push_back(std::move(g));
    }
  }

  std::optional<VertexSet> run() {
    for (const auto& g : groups_) {
      if (g.vertices.size() < g.need) return std::nullopt;
    }
    if (choose(0, 0, 0)) return chosen_;
    return std::nullopt;
  }

 private:
  struct Group {
    std::vector<Vertex> vertices;
    std::size_t need = 0;
  };

  bool choose(std::size_t group, std::size_t start, std::size_t taken) {
    if (group == groups_.size()) {
      if ((++visited_ & 0xfff) == 0) budget_.check();
      return is_connected(inst_.graph, chosen_);
    }
    const Group& g = groups_[group];
    if (taken == g.need) return choose(group + 1, 0, 0);
    for (std::size_t i = start; i + (g.need - taken) <= g.vertices.size(); ++i) {
      chosen_.push_back(g.vertices[i]);
      if (choose(group, i + 1, taken + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Instance& inst_;
  const Budget& budget_;
  std::vector<Group> groups_;
  VertexSet chosen_;
  std::size_t visited_ = 0;
};

}  // namespace

SolveOutcome solve_brute(const Instance& inst, const Budget& budget) {
  inst.validate();
  if (inst.graph.size() > kBruteMaxVertices) {
    throw CapacityError("brute force is limited to " + std::to_string(kBruteMaxVertices) + " vertices");
  }
  BruteSearch search(inst, budget);
  if (auto w = search.run()) {
    SolveOutcome out = SolveOutcome::yes(*w);
    if (!verify_solution(inst, out.witness())) throw std::logic_error("brute force produced an invalid witness");
    return out;
  }
  return SolveOutcome::no();
}

}  // namespace motif
