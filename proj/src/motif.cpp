#include "motif/motif.hpp"

#include <algorithm>

namespace motif {

Motif Motif::from_colors(std::span<const Color> colors) {
  Motif m;
  for (Color c : colors) m.add(c);
  return m;
}

std::size_t Motif::distinct() const {
  return static_cast<std::size_t>(std::count_if(counts_.begin(), counts_.end(),
                                                [](std::uint32_t x) { return x > 0; }));
}

void Motif::add(Color c, std::uint32_t times) {
  if (times == 0) return;
  if (c >= counts_.size()) counts_.resize(static_cast<std::size_t>(c) + 1, 0);
  counts_[c] += times;
  total_ += times;
}

void Motif::remove(Color c, std::uint32_t times) {
  if (c >= counts_.size()) return;
  const std::uint32_t taken = std::min(times, counts_[c]);
  counts_[c] -= taken;
  total_ -= taken;
  trim();
}

bool Motif::subset_of(const Motif& other) const {
  if (total_ > other.total_) return false;
  for (std::size_t c = 0; c < counts_.size(); ++c) {
    if (counts_[c] > other.multiplicity(static_cast<Color>(c))) return false;
  }
  return true;
}

std::vector<std::pair<Color, std::uint32_t>> Motif::entries() const {
  std::vector<std::pair<Color, std::uint32_t>> out;
  for (std::size_t c = 0; c < counts_.size(); ++c) {
    if (counts_[c] > 0) out.emplace_back(static_cast<Color>(c), counts_[c]);
  }
  return out;
}

std::vector<Color> Motif::expand() const {
  std::vector<Color> out;
  out.reserve(total_);
  for (std::size_t c = 0; c < counts_.size(); ++c) out.insert(out.end(), counts_[c], static_cast<Color>(c));
  return out;
}

std::string Motif::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto [c, m] : entries()) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(m) + "x" + std::to_string(c);
  }
  return s + "}";
}

void Motif::trim() {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

Motif operator+(Motif a, const Motif& b) {
  for (auto [c, m] : b.entries()) a.add(c, m);
  return a;
}

Motif operator-(Motif a, const Motif& b) {
  for (auto [c, m] : b.entries()) a.remove(c, m);
  return a;
}

Motif colors_of(std::span<const Color> coloring, std::span<const Vertex> vertices) {
  Motif m;
  for (Vertex v : vertices) m.add(coloring[v]);
  return m;
}

}  // namespace motif
