#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "internal.hpp"
#include "motif/errors.hpp"
#include "motif/estimators.hpp"

namespace motif {

namespace {

// Serializes a search state for the failure memo.
std::string state_key(std::size_t index, const std::vector<std::uint32_t>& need, const std::vector<std::uint8_t>& labels) {
  std::string key = std::to_string(index);
  for (auto x : need) {
    key.push_back(':');
    key += std::to_string(x);
  }
  key.push_back('|');
  key.append(labels.begin(), labels.end());
  return key;
}

void relabel(std::vector<std::uint8_t>& labels) {
  std::vector<int> map(256, -1);
  std::uint8_t next = 0;
  for (auto& l : labels) {
    if (map[l] < 0) map[l] = next++;
    l = static_cast<std::uint8_t>(map[l]);
  }
}

void merge(std::vector<std::uint8_t>& labels, std::span<const std::size_t> members) {
  if (members.size() < 2) return;
  const std::uint8_t to = labels[members[0]];
  for (std::size_t m : members) {
    const std::uint8_t from = labels[m];
    if (from == to) continue;
    for (auto& l : labels) {
      if (l == from) l = to;
    }
  }
}

bool single_label(const std::vector<std::uint8_t>& labels) {
  return std::all_of(labels.begin(), labels.end(), [&](std::uint8_t l) { return l == labels.front(); });
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> solve_on_path(std::span<const Color> word, const Motif& motif) {
  const std::size_t m = motif.total();
  if (m == 0 || m > word.size()) return std::nullopt;
  Color bound = motif.color_bound();
  for (Color c : word) bound = std::max(bound, c + 1);
  // diff[c] = window count - motif count; `off` counts colors with diff != 0.
  std::vector<std::int64_t> diff(bound, 0);
  std::size_t off = 0;
  for (auto [c, k] : motif.entries()) {
    diff[c] = -static_cast<std::int64_t>(k);
    ++off;
  }
  auto bump = [&](Color c, std::int64_t delta) {
    if (diff[c] == 0) ++off;
    diff[c] += delta;
    if (diff[c] == 0) --off;
  };
  for (std::size_t j = 0; j < word.size(); ++j) {
    bump(word[j], 1);
    if (j >= m) bump(word[j - m], -1);
    if (j + 1 >= m && off == 0) return std::make_pair(j + 1 - m, j);
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> solve_star_words(const StarWordProblem& problem) {
  if (problem.words.empty()) throw InputError("star word problem needs at least one word");
  const auto entries = problem.target.entries();
  std::vector<std::uint32_t> need;
  std::vector<int> index(problem.target.color_bound(), -1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    need.push_back(entries[i].second);
    index[entries[i].first] = static_cast<int>(i);
  }
  std::unordered_set<std::string> failed;
  std::vector<std::size_t> lengths;
  const std::vector<std::uint8_t> no_labels;

  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t w, std::size_t left) -> bool {
    if (left == 0) {
      lengths.resize(problem.words.size(), 0);
      return true;
    }
    if (w == problem.words.size()) return false;
    const std::string key = state_key(w, need, no_labels);
    if (failed.count(key)) return false;
    const auto& word = problem.words[w];
    std::size_t a = 0;
    std::vector<int> used;
    for (;;) {
      lengths.push_back(a);
      if (rec(w + 1, left - a)) return true;
      lengths.pop_back();
      if (a == word.size() || a == left) break;
      const Color c = word[a];
      const int x = c < index.size() ? index[c] : -1;
      if (x < 0 || need[x] == 0) break;
      --need[x];
      used.push_back(x);
      ++a;
    }
    for (int x : used) ++need[x];
    failed.insert(key);
    return false;
  };
  const std::size_t total = problem.target.total();
  if (rec(0, total)) return lengths;
  return std::nullopt;
}

namespace detail {

namespace {

struct Piece {
  const PathPiece* path;
  std::vector<std::size_t> front;  // T-indices adjacent to the first vertex
  std::vector<std::size_t> back;   // T-indices adjacent to the last vertex
};

class PieceSearch {
 public:
  PieceSearch(const Instance& inst, std::vector<Piece> pieces, const Motif& rest, const std::vector<std::uint8_t>& labels)
      : inst_(inst), pieces_(std::move(pieces)), labels_(labels) {
    index_.assign(std::max<Color>(rest.color_bound(), 1), -1);
    for (auto [c, m] : rest.entries()) {
      index_[c] = static_cast<int>(need_.size());
      need_.push_back(m);
    }
    left_ = rest.total();
    capacity_.assign(pieces_.size() + 1, 0);
    for (std::size_t i = pieces_.size(); i-- > 0;) capacity_[i] = capacity_[i + 1] + pieces_[i].path->vertices.size();
  }

  bool run() { return rec(0, labels_); }

  VertexSet chosen() const { return chosen_; }

 private:
  int color_index(Vertex v) const {
    const Color c = inst_.colors[v];
    return c < index_.size() ? index_[c] : -1;
  }

  bool take(Vertex v) {
    const int x = color_index(v);
    if (x < 0 || need_[x] == 0) return false;
    --need_[x];
    --left_;
    return true;
  }

  void give(Vertex v) {
    ++need_[color_index(v)];
    ++left_;
  }

  bool rec(std::size_t pi, const std::vector<std::uint8_t>& labels) {
    if (left_ == 0) return single_label(labels);
    if (pi == pieces_.size() || left_ > capacity_[pi]) return false;
    const std::string key = state_key(pi, need_, labels);
    if (failed_.count(key)) return false;

    const Piece& p = pieces_[pi];
    const auto& vs = p.path->vertices;
    const std::size_t l = vs.size();
    const bool can_front = !p.front.empty();
    const bool can_back = !p.back.empty();
    std::size_t a = 0;
    for (;;) {
      std::size_t b = 0;
      for (;;) {
        const bool full = a + b == l && l > 0;
        const bool canonical = !full || (can_front ? b == 0 : a == 0);
        if (canonical) {
          std::vector<std::uint8_t> next = labels;
          if (a > 0 || b == l) merge(next, p.front);
          if (b > 0 || a == l) merge(next, p.back);
          if (full && !p.front.empty() && !p.back.empty()) {
            const std::size_t ends[2] = {p.front[0], p.back[0]};
            merge(next, ends);
          }
          relabel(next);
          const std::size_t mark = chosen_.size();
          chosen_.insert(chosen_.end(), vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(a));
          chosen_.insert(chosen_.end(), vs.end() - static_cast<std::ptrdiff_t>(b), vs.end());
          if (rec(pi + 1, next)) return true;
          chosen_.resize(mark);
        }
        if (!can_back || a + b == l || !take(vs[l - 1 - b])) break;
        ++b;
      }
      for (std::size_t i = 0; i < b; ++i) give(vs[l - 1 - i]);
      if (!can_front || a == l || !take(vs[a])) break;
      ++a;
    }
    for (std::size_t i = 0; i < a; ++i) give(vs[i]);
    failed_.insert(key);
    return false;
  }

  const Instance& inst_;
  std::vector<Piece> pieces_;
  std::vector<std::uint8_t> labels_;
  std::vector<int> index_;
  std::vector<std::uint32_t> need_;
  std::size_t left_ = 0;
  std::vector<std::size_t> capacity_;
  std::unordered_set<std::string> failed_;
  VertexSet chosen_;
};

Witness on_word(const Instance& inst, const std::vector<Vertex>& order) {
  std::vector<Color> word;
  for (Vertex v : order) word.push_back(inst.colors[v]);
  auto window = solve_on_path(word, inst.motif);
  if (!window) return std::nullopt;
  VertexSet r(order.begin() + static_cast<std::ptrdiff_t>(window->first),
              order.begin() + static_cast<std::ptrdiff_t>(window->second + 1));
  std::sort(r.begin(), r.end());
  return r;
}

Witness on_cycle(const Instance& inst) {
  const Graph& g = inst.graph;
  const std::size_t n = g.size();
  const std::size_t m = inst.motif.total();
  if (m > n) return std::nullopt;
  std::vector<Vertex> order{0};
  Vertex prev = 0;
  Vertex cur = g.neighbors(0)[0];
  while (cur != 0) {
    order.push_back(cur);
    const auto nb = g.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (m == n) {
    if (colors_of(inst.colors, order) == inst.motif) {
      VertexSet all(order.begin(), order.end());
      std::sort(all.begin(), all.end());
      return all;
    }
    return std::nullopt;
  }
  // Every window of length m appears in the doubled order.
  std::vector<Vertex> doubled = order;
  doubled.insert(doubled.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m - 1));
  return on_word(inst, doubled);
}

}  // namespace

Witness max_leaf_core(const Instance& inst, std::size_t max_parameter, const ExecutionContext& ctx) {
  const Graph& g = inst.graph;
  if (g.size() == 0) return std::nullopt;
  const Degree3Decomposition d = degree3_decomposition(g);
  if (d.cycle) return on_cycle(inst);

  // Solutions avoiding every high-degree vertex lie on one path piece.
  for (const auto& piece : d.paths) {
    if (Witness w = on_word(inst, piece.vertices)) return w;
  }
  const VertexSet& s = d.high_degree;
  if (s.empty()) return std::nullopt;
  check_parameter(s.size(), std::min<std::size_t>(max_parameter, 62), "high-degree set");

  std::vector<std::size_t> masks(std::size_t{1} << s.size());
  std::iota(masks.begin(), masks.end(), 0);

  auto attempt = [&](std::size_t index) -> Witness {
    const std::uint64_t mask = masks[index];
    if (mask == 0) return std::nullopt;
    const Motif inside = colors_of_mask(inst, s, mask);
    if (!inside.subset_of(inst.motif)) return std::nullopt;
    VertexSet t;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if ((mask >> i) & 1) t.push_back(s[i]);
    }
    if (t.size() > 255) return std::nullopt;
    std::vector<std::uint8_t> labels(t.size());
    std::iota(labels.begin(), labels.end(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (g.adjacent(t[i], t[j])) {
          const std::size_t pair[2] = {i, j};
          merge(labels, pair);
        }
      }
    }
    relabel(labels);
    const Motif rest = inst.motif - inside;

    auto t_index = [&](const VertexSet& attach) {
      std::vector<std::size_t> out;
      for (Vertex v : attach) {
        auto it = std::lower_bound(t.begin(), t.end(), v);
        if (it != t.end() && *it == v) out.push_back(static_cast<std::size_t>(it - t.begin()));
      }
      return out;
    };
    std::vector<Piece> pieces;
    for (const auto& piece : d.paths) {
      Piece p{&piece, t_index(piece.front_attach), t_index(piece.back_attach)};
      if (!p.front.empty() || !p.back.empty()) pieces.push_back(std::move(p));
    }
    PieceSearch search(inst, std::move(pieces), rest, labels);
    if (!search.run()) return std::nullopt;
    VertexSet r = t;
    const VertexSet extra = search.chosen();
    r.insert(r.end(), extra.begin(), extra.end());
    std::sort(r.begin(), r.end());
    if (!verify_solution(inst, r)) return std::nullopt;
    return r;
  };

  return first_success<VertexSet>(masks.size(), ctx, attempt);
}

}  // namespace detail
}  // namespace motif
