#pragma once

#include "motif/generators.hpp"

namespace motif::detail {

// Vertex-by-vertex instance assembly for the generators.
class Builder {
 public:
  Vertex add(Color c) {
    colors_.push_back(c);
    return static_cast<Vertex>(colors_.size() - 1);
  }
  Vertex add_after(Vertex prev, Color c) {
    const Vertex v = add(c);
    edge(prev, v);
    return v;
  }
  void edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  void clique(const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) edge(s[i], s[j]);
    }
  }
  std::size_t size() const { return colors_.size(); }

  Instance finish(Motif motif) const {
    Instance inst;
    inst.graph = Graph::from_edges(colors_.size(), edges_);
    inst.colors = colors_;
    inst.motif = std::move(motif);
    return inst;
  }
  // Motif: every color used, once.
  Instance finish_colorful() const {
    Motif m;
    Color bound = 0;
    for (Color c : colors_) bound = std::max(bound, c + 1);
    for (Color c = 0; c < bound; ++c) m.add(c);
    return finish(std::move(m));
  }

 private:
  Coloring colors_;
  std::vector<Edge> edges_;
};

}  // namespace motif::detail
