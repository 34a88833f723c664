#include <algorithm>
#include <set>

#include "common.hpp"
#include "motif/errors.hpp"

namespace motif {

GeneratedInstance gen_or_composition(const std::vector<X3cInstance>& sources, bool colorful) {
  if (sources.empty()) throw InputError("OR composition needs at least one instance");
  for (const auto& x : sources) {
    x.validate();
    if (x.q != sources[0].q || x.triples.size() != sources[0].triples.size()) {
      throw InputError("OR composition needs equal q and family size");
    }
  }
  const std::size_t q = sources[0].q;
  const std::size_t u = 3 * q;
  const std::size_t layers = colorful ? q : 1;
  // Colors: subset layer j -> j (or 1), element x -> element_color(x), roots -> root_color.
  const Color root_color = colorful ? static_cast<Color>(4 * q) : 0;
  auto subset_color = [&](std::size_t j) { return colorful ? static_cast<Color>(j) : Color{1}; };
  auto element_color = [&](std::size_t x) { return colorful ? static_cast<Color>(q + x) : Color{2}; };

  detail::Builder b;
  GeneratedInstance out;
  std::vector<Vertex> roots;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    roots.push_back(b.add(root_color));
    out.certificate.emplace_back("instance:" + std::to_string(i), roots.back());
  }
  std::vector<Vertex> elements;
  for (std::size_t x = 0; x < u; ++x) elements.push_back(b.add(element_color(x)));

  std::vector<std::set<std::array<std::uint32_t, 3>>> families;
  for (const auto& src : sources) {
    families.emplace_back();
    for (auto tr : src.triples) {
      std::sort(tr.begin(), tr.end());
      families.back().insert(tr);
    }
  }
  for (std::uint32_t x = 0; x < u; ++x) {
    for (std::uint32_t y = x + 1; y < u; ++y) {
      for (std::uint32_t z = y + 1; z < u; ++z) {
        const std::array<std::uint32_t, 3> tr{x, y, z};
        for (std::size_t j = 0; j < layers; ++j) {
          const Vertex s = b.add(subset_color(j));
          for (auto e : tr) b.edge(s, elements[e]);
          for (std::size_t i = 0; i < sources.size(); ++i) {
            if (families[i].count(tr)) b.edge(roots[i], s);
          }
        }
      }
    }
  }

  Motif m;
  if (colorful) {
    for (Color c = 0; c <= root_color; ++c) m.add(c);
  } else {
    m.add(0);
    m.add(1, static_cast<std::uint32_t>(q));
    m.add(2, static_cast<std::uint32_t>(u));
  }
  out.instance = b.finish(std::move(m));
  out.claims.emplace_back("vertex-cover-witness", std::to_string(sources.size() + u));
  return out;
}

}  // namespace motif
