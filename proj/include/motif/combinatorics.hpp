#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "motif/graph.hpp"

namespace motif {

// Enumeration primitives. Each visitor returns true to continue and false to
// stop early; the enumerator returns false iff it was stopped.

using Blocks = std::vector<std::vector<std::size_t>>;

/// Every subset of {0..n-1} as a bitmask, in increasing mask order (empty
/// set first). Requires n < 64.
bool for_each_subset(std::size_t n, const std::function<bool(std::uint64_t)>& visit);

/// Subset masks of {0..n-1} ordered by cardinality, then by mask value.
std::vector<std::uint64_t> masks_by_cardinality(std::size_t n);

/// Members of a mask as indices.
std::vector<std::size_t> mask_members(std::uint64_t mask);

/// Subsets of `items`, empty set first, in increasing mask order.
template <typename T>
std::vector<std::vector<T>> subsets(std::span<const T> items) {
  std::vector<std::vector<T>> out;
  for_each_subset(items.size(), [&](std::uint64_t mask) {
    std::vector<T> s;
    for (std::size_t i : mask_members(mask)) s.push_back(items[i]);
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

/// Set partitions of {0..n-1} as restricted-growth strings: rgs[i] is the
/// block of element i, rgs[0] == 0 and each new block id is one more than the
/// previous maximum. Lexicographic order. n == 0 yields one empty partition.
bool for_each_set_partition(std::size_t n,
                            const std::function<bool(std::span<const std::uint32_t>, std::size_t)>& visit);

/// Ordered partitions of {0..n-1} into exactly l nonempty blocks: each
/// restricted-growth string with l blocks combined with every ordering of its
/// blocks. Yields l! * S(n, l) block lists. Throws InputError unless
/// 1 <= l <= n.
bool for_each_ordered_partition(std::size_t n, std::size_t l,
                                const std::function<bool(const Blocks&)>& visit);

/// All k^(k-2) labeled trees on nodes 0..k-1 by Prüfer decoding. Each tree is
/// given as k-1 edges (a, b) with a < b, sorted. k == 1 yields the empty tree.
bool for_each_labeled_tree(std::size_t k, const std::function<bool(std::span<const Edge>)>& visit);

/// Decodes one Prüfer sequence over [0, k) with k == seq.size() + 2.
std::vector<Edge> prufer_decode(std::span<const std::uint32_t> seq);

}  // namespace motif
