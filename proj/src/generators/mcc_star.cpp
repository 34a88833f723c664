#include <algorithm>
#include <map>
#include <stdexcept>

#include "common.hpp"

namespace motif {

namespace {

constexpr Color kCenter = 0;
constexpr Color kBegin = 1;
constexpr Color kEnd = 2;

// Appends a block begin, internals, end after `prev`; returns the end vertex.
Vertex add_block(detail::Builder& b, Vertex prev, const std::vector<Color>& internals) {
  prev = b.add_after(prev, kBegin);
  for (Color c : internals) prev = b.add_after(prev, c);
  return b.add_after(prev, kEnd);
}

}  // namespace

GeneratedInstance gen_mcc_star(const PartitionedGraph& p) {
  p.validate();
  const std::size_t k = p.k;
  const std::size_t t = p.t;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (p.pattern) {
    pairs = *p.pattern;
    std::sort(pairs.begin(), pairs.end());
  } else {
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    }
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, Color> pair_color;
  for (std::size_t x = 0; x < pairs.size(); ++x) pair_color[pairs[x]] = static_cast<Color>(3 + x);

  detail::Builder b;
  GeneratedInstance out;
  const Vertex center = b.add(kCenter);
  out.certificate.emplace_back("center", center);

  // P_i: t-1 copies of B_i.
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<Color> internals;
    for (const auto& [pr, c] : pair_color) {
      if (pr.second == i) internals.push_back(c);
      if (pr.first == i) internals.insert(internals.end(), t, c);
    }
    std::sort(internals.begin(), internals.end());
    Vertex prev = center;
    out.certificate.emplace_back("class:" + std::to_string(i) + ":0", center);
    for (std::size_t q = 1; q < t; ++q) {
      prev = add_block(b, prev, internals);
      out.certificate.emplace_back("class:" + std::to_string(i) + ":" + std::to_string(q), prev);
    }
  }

  // P_ij: block h carries D[h] = L[h] - L[h-1] vertices of color ij, where
  // L[h] = t^2 - A[h] and A lists the encoded edges x = t*a + b descending.
  for (const auto& [pr, c] : pair_color) {
    std::vector<std::pair<std::size_t, Edge>> a_list;
    for (auto [u, v] : p.edges) {
      if (p.class_of(u) > p.class_of(v)) std::swap(u, v);
      if (p.class_of(u) != pr.first || p.class_of(v) != pr.second) continue;
      a_list.emplace_back(t * (u % t) + v % t, Edge{u, v});
    }
    std::sort(a_list.begin(), a_list.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    a_list.erase(std::unique(a_list.begin(), a_list.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
                 a_list.end());
    if (a_list.empty()) {
      out.warnings.push_back("empty-pair " + std::to_string(pr.first) + " " + std::to_string(pr.second));
      continue;
    }
    Vertex prev = center;
    std::size_t last = 0;
    for (const auto& [x, e] : a_list) {
      const std::size_t l = t * t - x;
      prev = add_block(b, prev, std::vector<Color>(l - last, c));
      last = l;
      out.certificate.emplace_back("edge:" + std::to_string(e.first) + "-" + std::to_string(e.second), prev);
    }
  }

  const std::size_t s = k * (t - 1) + pairs.size() * t * t;
  Vertex prev = center;
  for (std::size_t i = 0; i < s; ++i) {
    prev = b.add_after(prev, kBegin);
    prev = b.add_after(prev, kEnd);
  }

  Motif m;
  m.add(kCenter);
  m.add(kBegin, static_cast<std::uint32_t>(s));
  m.add(kEnd, static_cast<std::uint32_t>(s));
  for (const auto& [pr, c] : pair_color) m.add(c, static_cast<std::uint32_t>(t * t));
  out.instance = b.finish(std::move(m));

  const Graph& g = out.instance.graph;
  if (!has_block_tiling(out.instance, center, kBegin, kEnd)) throw std::logic_error("mcc-star: block tiling violated");
  const std::size_t leaves = leaf_count(g);
  if (g.degree(center) >= 2 && leaves != g.degree(center)) throw std::logic_error("mcc-star: not a subdivided star");
  out.claims.emplace_back("max-leaf", std::to_string(leaves));
  return out;
}

}  // namespace motif
