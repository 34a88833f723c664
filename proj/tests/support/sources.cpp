#include "sources.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "motif/estimators.hpp"
#include "motif/solvers.hpp"
#include "oracles.hpp"

namespace motif::testing {

namespace {

// Calls f on every k-subset of {0..n-1}; stops when f returns true.
bool any_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (k > n) return false;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    if (f(pick)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool solve_yes(const Instance& inst, Algorithm a, std::optional<std::vector<VertexSet>> partition = std::nullopt) {
  SolverConfig cfg;
  cfg.algorithm = a;
  cfg.vertex_clique_cover = std::move(partition);
  const SolveOutcome r = solve(inst, cfg);
  if (r.is_yes() && !verify_solution(inst, r.witness())) throw std::logic_error("solver returned an invalid witness");
  return r.is_yes();
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

bool x3c_has_cover(const X3cInstance& x) {
  return any_subset(x.triples.size(), x.q, [&](const std::vector<std::size_t>& pick) {
    std::vector<int> seen(3 * x.q, 0);
    for (auto i : pick) {
      for (auto e : x.triples[i]) ++seen[e];
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
  });
}

bool hitting_set_exists(const SetSystem& s) {
  for (std::size_t k = 0; k <= std::min(s.budget, s.universe); ++k) {
    const bool found = any_subset(s.universe, k, [&](const std::vector<std::size_t>& pick) {
      return std::all_of(s.sets.begin(), s.sets.end(), [&](const auto& set) {
        return std::any_of(set.begin(), set.end(), [&](auto e) { return std::count(pick.begin(), pick.end(), e) > 0; });
      });
    });
    if (found) return true;
  }
  return false;
}

bool set_cover_exists(const SetSystem& s) {
  for (std::size_t k = 0; k <= std::min(s.budget, s.sets.size()); ++k) {
    const bool found = any_subset(s.sets.size(), k, [&](const std::vector<std::size_t>& pick) {
      std::vector<bool> hit(s.universe, false);
      for (auto i : pick) {
        for (auto e : s.sets[i]) hit[e] = true;
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    });
    if (found) return true;
  }
  return false;
}

bool dominating_set_exists(const Graph& g, std::size_t budget) {
  const std::size_t n = g.size();
  for (std::size_t k = 0; k <= std::min(budget, n); ++k) {
    const bool found = any_subset(n, k, [&](const std::vector<std::size_t>& pick) {
      std::vector<bool> hit(n, false);
      for (auto v : pick) {
        hit[v] = true;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) hit[w] = true;
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    });
    if (found) return true;
  }
  return false;
}

bool multicolored_clique_exists(const PartitionedGraph& p) {
  std::set<Edge> edges;
  for (auto [u, v] : p.edges) {
    edges.emplace(u, v);
    edges.emplace(v, u);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (p.pattern) {
    pairs = *p.pattern;
  } else {
    for (std::uint32_t i = 0; i < p.k; ++i) {
      for (std::uint32_t j = i + 1; j < p.k; ++j) pairs.emplace_back(i, j);
    }
  }
  std::vector<std::size_t> pick(p.k, 0);
  for (;;) {
    bool ok = true;
    for (auto [i, j] : pairs) {
      const auto u = static_cast<Vertex>(i * p.t + pick[i]);
      const auto v = static_cast<Vertex>(j * p.t + pick[j]);
      if (!edges.count({u, v})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < p.k && ++pick[i] == p.t) pick[i++] = 0;
    if (i == p.k) return false;
  }
}

bool rooted_solution_exists(const Instance& inst, Vertex root) {
  const std::size_t n = inst.graph.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!((mask >> root) & 1)) continue;
    VertexSet r;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1) r.push_back(v);
    }
    if (verify_solution(inst, r)) return true;
  }
  return false;
}

X3cInstance random_x3c(Rng& rng, std::size_t q, std::size_t triples) {
  X3cInstance x;
  x.q = q;
  std::vector<std::uint32_t> u(3 * q);
  std::iota(u.begin(), u.end(), 0);
  if (triples >= q && rng() % 2 == 0) {
    std::shuffle(u.begin(), u.end(), rng);
    for (std::size_t i = 0; i < q; ++i) x.triples.push_back({u[3 * i], u[3 * i + 1], u[3 * i + 2]});
  }
  while (x.triples.size() < triples) {
    std::shuffle(u.begin(), u.end(), rng);
    x.triples.push_back({u[0], u[1], u[2]});
  }
  std::shuffle(x.triples.begin(), x.triples.end(), rng);
  return x;
}

X3cInstance random_x3c(Rng& rng) { return random_x3c(rng, uniform(rng, 1, 2), uniform(rng, 1, 5)); }

SetSystem random_set_system(Rng& rng, std::size_t max_universe) {
  SetSystem s;
  s.universe = uniform(rng, 1, max_universe);
  const std::size_t m = uniform(rng, 1, 5);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::uint32_t> set;
    for (std::uint32_t e = 0; e < s.universe; ++e) {
      if (rng() % 3 == 0) set.push_back(e);
    }
    s.sets.push_back(std::move(set));
  }
  s.budget = uniform(rng, 1, 3);
  return s;
}

PartitionedGraph random_partitioned_graph(Rng& rng, std::size_t k, std::size_t t, bool with_pattern) {
  PartitionedGraph p;
  p.k = k;
  p.t = t;
  if (with_pattern) {
    p.pattern.emplace();
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = i + 1; j < k; ++j) {
        if (rng() % 2 == 0) p.pattern->emplace_back(i, j);
      }
    }
    if (p.pattern->empty()) p.pattern->emplace_back(0, 1);
  }
  const double density = std::uniform_real_distribution<double>(0.3, 0.8)(rng);
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (p.pattern && std::find(p.pattern->begin(), p.pattern->end(), std::make_pair<std::uint32_t, std::uint32_t>(i, j)) == p.pattern->end()) {
        continue;
      }
      for (std::size_t a = 0; a < t; ++a) {
        for (std::size_t b = 0; b < t; ++b) {
          if (coin(rng)) p.edges.emplace_back(static_cast<Vertex>(i * t + a), static_cast<Vertex>(j * t + b));
        }
      }
    }
  }
  return p;
}

DomsetSource random_domset_source(Rng& rng, std::size_t max_n) {
  DomsetSource s;
  const std::size_t n = uniform(rng, 1, max_n);
  s.graph = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.5)(rng));
  s.budget = uniform(rng, 1, 3);
  return s;
}

std::vector<SoundnessCase> soundness_cases() {
  std::vector<SoundnessCase> cases;
  cases.push_back({"x3c-paths", [](Rng& rng) {
                     const auto x = random_x3c(rng);
                     return std::make_pair(x3c_has_cover(x), solve_yes(gen_x3c_paths(x).instance, Algorithm::max_leaf));
                   }});
  cases.push_back({"x3c-comb", [](Rng& rng) {
                     const auto x = random_x3c(rng);
                     return std::make_pair(x3c_has_cover(x), solve_yes(gen_x3c_comb(x).instance, Algorithm::max_leaf));
                   }});
  cases.push_back({"x3c-superstar", [](Rng& rng) {
                     const auto x = random_x3c(rng);
                     const auto g = gen_x3c_superstar_cliques(x);
                     return std::make_pair(x3c_has_cover(x),
                                           solve_yes(g.instance, Algorithm::vertex_clique_cover, g.vertex_clique_cover));
                   }});
  cases.push_back({"x3c-superstar-multiset", [](Rng& rng) {
                     const auto x = random_x3c(rng);
                     const auto g = gen_x3c_superstar_cliques(x, false);
                     return std::make_pair(x3c_has_cover(x),
                                           solve_yes(g.instance, Algorithm::vertex_clique_cover, g.vertex_clique_cover));
                   }});
  cases.push_back({"domset-gadget", [](Rng& rng) {
                     const Instance inst = random_instance(rng, 7, 4);
                     const auto root = static_cast<Vertex>(rng() % inst.graph.size());
                     const auto g = gen_domset_gadget(inst, root);
                     return std::make_pair(rooted_solution_exists(inst, root), solve_yes(g.instance, Algorithm::brute));
                   }});
  cases.push_back({"domset-cluster", [](Rng& rng) {
                     const auto s = random_domset_source(rng);
                     const auto g = gen_domset_reduction(s, DomsetVariant::cluster);
                     return std::make_pair(dominating_set_exists(s.graph, s.budget),
                                           solve_yes(g.instance, Algorithm::vertex_clique_cover, g.vertex_clique_cover));
                   }});
  cases.push_back({"domset-tree", [](Rng& rng) {
                     const auto s = random_domset_source(rng);
                     const auto g = gen_domset_reduction(s, DomsetVariant::tree);
                     return std::make_pair(dominating_set_exists(s.graph, s.budget),
                                           solve_yes(g.instance, Algorithm::vertex_cover));
                   }});
  cases.push_back({"hitting-set-split", [](Rng& rng) {
                     const auto s = random_set_system(rng);
                     return std::make_pair(hitting_set_exists(s),
                                           solve_yes(gen_hitting_set_split(s).instance, Algorithm::vertex_cover));
                   }});
  cases.push_back({"set-cover-split", [](Rng& rng) {
                     const auto s = random_set_system(rng);
                     return std::make_pair(set_cover_exists(s),
                                           solve_yes(gen_set_cover_split(s).instance, Algorithm::dist_clique));
                   }});
  cases.push_back({"mcc-star", [](Rng& rng) {
                     const auto p = random_partitioned_graph(rng);
                     return std::make_pair(multicolored_clique_exists(p),
                                           solve_yes(gen_mcc_star(p).instance, Algorithm::max_leaf));
                   }});
  cases.push_back({"mcc-star-pattern", [](Rng& rng) {
                     const auto p = random_partitioned_graph(rng, 3, 2, true);
                     return std::make_pair(multicolored_clique_exists(p),
                                           solve_yes(gen_mcc_star(p).instance, Algorithm::max_leaf));
                   }});
  for (bool colorful : {false, true}) {
    cases.push_back({colorful ? "or-composition-colorful" : "or-composition", [colorful](Rng& rng) {
                       const std::size_t q = uniform(rng, 1, 2);
                       const std::size_t m = uniform(rng, 1, 4);
                       std::vector<X3cInstance> xs;
                       bool any = false;
                       for (int i = 0; i < 2; ++i) {
                         xs.push_back(random_x3c(rng, q, m));
                         any = any || x3c_has_cover(xs.back());
                       }
                       return std::make_pair(any, solve_yes(gen_or_composition(xs, colorful).instance, Algorithm::vertex_cover));
                     }});
  }
  return cases;
}

namespace {

std::string check_cluster_after(const Graph& g, Vertex v) {
  std::vector<Vertex> rest;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (u != v) rest.push_back(u);
  }
  for (const auto& comp : connected_components(g, rest)) {
    for (Vertex a : comp) {
      for (Vertex b : comp) {
        if (a != b && !g.adjacent(a, b)) return "component after removal is not a clique";
      }
    }
  }
  return "";
}

Vertex cert(const GeneratedInstance& g, const std::string& token) {
  for (const auto& [t, v] : g.certificate) {
    if (t == token) return v;
  }
  throw std::logic_error("missing certificate token " + token);
}

std::string check_certificate_ids(const GeneratedInstance& g) {
  for (const auto& [t, v] : g.certificate) {
    if (v >= g.instance.graph.size()) return "certificate id out of range for " + t;
  }
  return "";
}

// Walks every branch of a subdivided star and reads it as blocks.
std::string check_blocks(const Instance& inst, Vertex center) {
  const Graph& g = inst.graph;
  for (Vertex first : g.neighbors(center)) {
    Vertex prev = center;
    Vertex cur = first;
    std::vector<Color> word;
    for (;;) {
      word.push_back(inst.colors[cur]);
      const auto nb = g.neighbors(cur);
      if (nb.size() == 1) break;
      if (nb.size() != 2) return "branch vertex of degree > 2";
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    std::size_t i = 0;
    while (i < word.size()) {
      if (word[i] != 1) return "block does not start with the begin color";
      ++i;
      while (i < word.size() && word[i] > 2) ++i;
      if (i == word.size() || word[i] != 2) return "block does not end with the end color";
      ++i;
    }
  }
  return "";
}

}  // namespace

std::vector<std::pair<std::string, ClaimCheck>> claim_checks() {
  std::vector<std::pair<std::string, ClaimCheck>> out;
  out.emplace_back("x3c-paths", [](Rng& rng) -> std::string {
    const auto g = gen_x3c_paths(random_x3c(rng));
    const Graph& gr = g.instance.graph;
    const Vertex root = cert(g, "root");
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < gr.size(); ++v) {
      if (v != root) rest.push_back(v);
    }
    const auto comps = connected_components(gr, rest);
    std::size_t internal_edges = gr.edge_count() - gr.degree(root);
    if (internal_edges + comps.size() != rest.size()) return "forest check failed";
    for (Vertex v : rest) {
      if (gr.degree(v) - gr.adjacent(v, root) > 2) return "degree above 2 after removal";
    }
    if (comps.size() != g.certificate.size() - 1) return "unexpected path count";
    return check_certificate_ids(g);
  });
  out.emplace_back("x3c-comb", [](Rng& rng) -> std::string {
    const auto g = gen_x3c_comb(random_x3c(rng));
    for (auto [u, v] : g.instance.graph.edges()) {
      if ((u > v ? u - v : v - u) > 6) return "numbering gap above 6";
    }
    return check_certificate_ids(g);
  });
  out.emplace_back("x3c-superstar", [](Rng& rng) -> std::string {
    const auto g = gen_x3c_superstar_cliques(random_x3c(rng));
    if (auto e = check_cluster_after(g.instance.graph, cert(g, "root")); !e.empty()) return e;
    return check_certificate_ids(g);
  });
  out.emplace_back("domset-gadget", [](Rng& rng) -> std::string {
    const Instance inst = random_instance(rng, 7, 4);
    const auto g = gen_domset_gadget(inst, static_cast<Vertex>(rng() % inst.graph.size()));
    const Graph& gr = g.instance.graph;
    const Vertex u = cert(g, "u");
    const Vertex t = cert(g, "t");
    for (Vertex v = 0; v < gr.size(); ++v) {
      if (v != u && v != t && !gr.adjacent(v, u) && !gr.adjacent(v, t)) return "{u, t} does not dominate";
    }
    return check_certificate_ids(g);
  });
  out.emplace_back("domset-cluster", [](Rng& rng) -> std::string {
    const auto g = gen_domset_reduction(random_domset_source(rng), DomsetVariant::cluster);
    if (auto e = check_cluster_after(g.instance.graph, cert(g, "hub")); !e.empty()) return e;
    return check_certificate_ids(g);
  });
  out.emplace_back("hitting-set-split", [](Rng& rng) -> std::string {
    const auto s = random_set_system(rng);
    const auto g = gen_hitting_set_split(s);
    const Graph& gr = g.instance.graph;
    for (std::size_t a = 0; a < s.universe; ++a) {
      for (std::size_t b = a + 1; b < s.universe; ++b) {
        if (!gr.adjacent(cert(g, "element:" + std::to_string(a)), cert(g, "element:" + std::to_string(b)))) {
          return "element side is not a clique";
        }
      }
    }
    for (std::size_t a = 0; a < s.sets.size(); ++a) {
      for (std::size_t b = a + 1; b < s.sets.size(); ++b) {
        if (gr.adjacent(cert(g, "set:" + std::to_string(a)), cert(g, "set:" + std::to_string(b)))) {
          return "set side is not independent";
        }
      }
    }
    return check_certificate_ids(g);
  });
  out.emplace_back("set-cover-split", [](Rng& rng) -> std::string {
    const auto s = random_set_system(rng);
    const auto g = gen_set_cover_split(s);
    const Graph& gr = g.instance.graph;
    for (std::size_t a = 0; a < s.sets.size(); ++a) {
      for (std::size_t b = a + 1; b < s.sets.size(); ++b) {
        if (!gr.adjacent(cert(g, "set:" + std::to_string(a)), cert(g, "set:" + std::to_string(b)))) {
          return "set side is not a clique";
        }
      }
    }
    for (std::size_t a = 0; a < s.universe; ++a) {
      for (std::size_t b = a + 1; b < s.universe; ++b) {
        if (gr.adjacent(cert(g, "element:" + std::to_string(a)), cert(g, "element:" + std::to_string(b)))) {
          return "element side is not independent";
        }
      }
    }
    return check_certificate_ids(g);
  });
  out.emplace_back("mcc-star", [](Rng& rng) -> std::string {
    PartitionedGraph p = random_partitioned_graph(rng);
    // One edge per class pair keeps every pair path nonempty.
    for (std::size_t i = 0; i < p.k; ++i) {
      for (std::size_t j = i + 1; j < p.k; ++j) p.edges.emplace_back(static_cast<Vertex>(i * p.t), static_cast<Vertex>(j * p.t));
    }
    const auto g = gen_mcc_star(p);
    if (auto e = check_blocks(g.instance, cert(g, "center")); !e.empty()) return e;
    std::size_t leaves = 0;
    for (Vertex v = 0; v < g.instance.graph.size(); ++v) leaves += g.instance.graph.degree(v) == 1;
    if (leaves != p.k + p.k * (p.k - 1) / 2 + 1) return "leaf count differs from k + C(k,2) + 1";
    return check_certificate_ids(g);
  });
  out.emplace_back("or-composition", [](Rng& rng) -> std::string {
    const std::size_t q = uniform(rng, 1, 2);
    std::vector<X3cInstance> xs{random_x3c(rng, q, 3), random_x3c(rng, q, 3)};
    const auto g = gen_or_composition(xs);
    // Roots and element nodes cover every edge.
    for (auto [u, v] : g.instance.graph.edges()) {
      const bool cu = g.instance.colors[u] != 1;
      const bool cv = g.instance.colors[v] != 1;
      if (!cu && !cv) return "roots and elements do not cover the edges";
    }
    return check_certificate_ids(g);
  });
  return out;
}

}  // namespace motif::testing
