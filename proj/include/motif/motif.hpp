#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "motif/graph.hpp"

namespace motif {

/// Multiset of colors. Colors are dense ids, so multiplicities live in a
/// vector indexed by color; trailing zero entries are trimmed so that equal
/// multisets compare equal.
class Motif {
 public:
  Motif() = default;

  static Motif from_colors(std::span<const Color> colors);

  std::uint32_t multiplicity(Color c) const { return c < counts_.size() ? counts_[c] : 0; }
  std::size_t total() const { return total_; }
  bool empty() const { return total_ == 0; }

  /// Number of colors with positive multiplicity.
  std::size_t distinct() const;

  /// One past the largest color with positive multiplicity.
  Color color_bound() const { return static_cast<Color>(counts_.size()); }

  void add(Color c, std::uint32_t times = 1);

  /// Removes up to `times` occurrences of c, clamping at zero.
  void remove(Color c, std::uint32_t times = 1);

  /// Multiset inclusion: every multiplicity of *this is at most other's.
  bool subset_of(const Motif& other) const;

  /// (color, multiplicity) pairs with positive multiplicity, ascending color.
  std::vector<std::pair<Color, std::uint32_t>> entries() const;

  /// Colors with multiplicity, ascending.
  std::vector<Color> expand() const;

  std::string to_string() const;

  friend Motif operator+(Motif a, const Motif& b);
  /// Clipped difference: max(0, m_a(x) - m_b(x)).
  friend Motif operator-(Motif a, const Motif& b);
  friend bool operator==(const Motif&, const Motif&) = default;

 private:
  void trim();

  std::vector<std::uint32_t> counts_;
  std::size_t total_ = 0;
};

/// Colors of a vertex set as a multiset.
Motif colors_of(std::span<const Color> coloring, std::span<const Vertex> vertices);

}  // namespace motif
