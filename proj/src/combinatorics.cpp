#include "motif/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "motif/errors.hpp"

namespace motif {

bool for_each_subset(std::size_t n, const std::function<bool(std::uint64_t)>& visit) {
  if (n >= 64) throw CapacityError("subset enumeration limited to 63 items");
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (!visit(mask)) return false;
  }
  return true;
}

std::vector<std::uint64_t> masks_by_cardinality(std::size_t n) {
  if (n >= 64) throw CapacityError("subset enumeration limited to 63 items");
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << n);
  out.push_back(0);
  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack walks the k-subsets in increasing order.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      out.push_back(mask);
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      if (ripple == 0) break;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return out;
}

std::vector<std::size_t> mask_members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

namespace {

bool set_partitions_rec(std::vector<std::uint32_t>& rgs, std::size_t pos, std::uint32_t blocks,
                        const std::function<bool(std::span<const std::uint32_t>, std::size_t)>& visit) {
  if (pos == rgs.size()) return visit(rgs, blocks);
  for (std::uint32_t b = 0; b <= blocks; ++b) {
    rgs[pos] = b;
    if (!set_partitions_rec(rgs, pos + 1, std::max(blocks, b + 1), visit)) return false;
  }
  return true;
}

}  // namespace

bool for_each_set_partition(std::size_t n,
                            const std::function<bool(std::span<const std::uint32_t>, std::size_t)>& visit) {
  std::vector<std::uint32_t> rgs(n, 0);
  if (n == 0) return visit(rgs, 0);
  return set_partitions_rec(rgs, 1, 1, visit);
}

bool for_each_ordered_partition(std::size_t n, std::size_t l, const std::function<bool(const Blocks&)>& visit) {
  if (l < 1 || l > n) throw InputError("ordered partition needs 1 <= l <= n");
  Blocks blocks(l);
  std::vector<std::size_t> perm(l);
  return for_each_set_partition(n, [&](std::span<const std::uint32_t> rgs, std::size_t count) {
    if (count != l) return true;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (auto& b : blocks) b.clear();
      // perm[i] is the RGS block placed at position i.
      std::vector<std::size_t> position(l);
      for (std::size_t i = 0; i < l; ++i) position[perm[i]] = i;
      for (std::size_t item = 0; item < n; ++item) blocks[position[rgs[item]]].push_back(item);
      if (!visit(blocks)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  });
}

std::vector<Edge> prufer_decode(std::span<const std::uint32_t> seq) {
  const std::size_t k = seq.size() + 2;
  std::vector<std::size_t> degree(k, 1);
  for (auto x : seq) ++degree[x];
  std::vector<Edge> edges;
  edges.reserve(k - 1);
  for (auto x : seq) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min<Vertex>(static_cast<Vertex>(leaf), x), std::max<Vertex>(static_cast<Vertex>(leaf), x));
    --degree[leaf];
    --degree[x];
  }
  std::vector<Vertex> last;
  for (std::size_t v = 0; v < k; ++v) {
    if (degree[v] == 1) last.push_back(static_cast<Vertex>(v));
  }
  edges.emplace_back(last[0], last[1]);
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool for_each_labeled_tree(std::size_t k, const std::function<bool(std::span<const Edge>)>& visit) {
  if (k == 0) throw InputError("labeled trees need at least one node");
  if (k == 1) return visit({});
  if (k == 2) {
    const Edge e{0, 1};
    return visit(std::span<const Edge>(&e, 1));
  }
  std::vector<std::uint32_t> seq(k - 2, 0);
  while (true) {
    const auto edges = prufer_decode(seq);
    if (!visit(edges)) return false;
    std::size_t i = seq.size();
    while (i > 0) {
      --i;
      if (++seq[i] < k) break;
      seq[i] = 0;
      if (i == 0) return true;
    }
  }
}

}  // namespace motif
