// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "motif/csct.hpp"
#include "motif/estimators.hpp"
#include "motif/matching.hpp"
#include "motif/solvers.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"
#include "sources.hpp"

namespace motif {
namespace {

using testing::Rng;

// Returns "" when the criterion holds, else the first problem found; `detail`
// receives a short summary for the report line.
using Check = std::function<std::string(std::uint64_t seed, std::string& detail)>;

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  Check run;
};

std::string oracle_equivalence(std::uint64_t seed, std::string& detail) {
  struct Entry {
    const char* name;
    std::function<SolveOutcome(const Instance&)> solve;
  };
  const std::vector<Entry> solvers = {
      {"dist-clique", [](const Instance& i) { return solve_dist_clique(i); }},
      {"vc", [](const Instance& i) { return solve_vertex_cover(i); }},
      {"vcc", [](const Instance& i) { return solve_vertex_clique_cover(i, greedy_vertex_clique_cover(i.graph)); }},
      {"ecc", [](const Instance& i) { return solve_edge_clique_cover(i, edge_clique_cover_from_edges(i.graph)); }},
      {"cocluster", [](const Instance& i) { return solve_co_cluster(i); }},
      {"maxleaf", [](const Instance& i) { return solve_max_leaf_xp(i); }},
  };
  std::size_t yes = 0, total = 0;
  for (std::size_t s = 0; s < solvers.size(); ++s) {
    Rng rng(seed + s);
    for (int i = 0; i < 200; ++i) {
      const Instance inst = testing::random_instance(rng, 12, 6);
      const SolveOutcome expect = solve_brute(inst);
      const SolveOutcome got = solvers[s].solve(inst);
      ++total;
      if (got.is_yes() != expect.is_yes()) return std::string(solvers[s].name) + " disagrees on case " + std::to_string(i);
      if (got && !verify_solution(inst, got.witness())) {
        return std::string(solvers[s].name) + " witness fails on case " + std::to_string(i);
      }
      yes += got.is_yes();
    }
  }
  detail = std::to_string(total) + " runs, " + std::to_string(yes) + " YES";
  return "";
}

std::string csct_agreement(std::uint64_t seed, std::string& detail) {
  Rng rng(seed);
  std::size_t yes = 0;
  for (int i = 0; i < 200; ++i) {
    const CsctInstance inst = testing::random_csct(rng, 10, 12, 3);
    const auto sol = solve_csct(inst);
    if (sol.has_value() != testing::csct_exhaustive(inst)) return "disagreement on case " + std::to_string(i);
    if (sol && !is_valid_cover(inst, *sol)) return "invalid cover on case " + std::to_string(i);
    yes += sol.has_value();
  }
  detail = "200 instances, " + std::to_string(yes) + " YES";
  return "";
}

std::string soundness(std::uint64_t seed, std::string& detail) {
  const auto cases = testing::soundness_cases();
  for (std::size_t c = 0; c < cases.size(); ++c) {
    Rng rng(seed + c);
    for (int i = 0; i < 50; ++i) {
      const auto [source, generated] = cases[c].run(rng);
      if (source != generated) return cases[c].name + " differs on source " + std::to_string(i);
    }
  }
  detail = std::to_string(cases.size()) + " generators x 50 sources";
  return "";
}

std::string claims(std::uint64_t seed, std::string& detail) {
  Rng rng(seed);
  const auto checks = testing::claim_checks();
  for (const auto& [name, check] : checks) {
    for (int i = 0; i < 20; ++i) {
      if (std::string e = check(rng); !e.empty()) return name + ": " + e;
    }
  }
  detail = std::to_string(checks.size()) + " generators x 20 instances";
  return "";
}

bool is_path_component(const Graph& g, const VertexSet& comp) {
  std::set<Vertex> in(comp.begin(), comp.end());
  std::size_t edges = 0;
  for (Vertex v : comp) {
    std::size_t d = 0;
    for (Vertex w : g.neighbors(v)) d += in.count(w);
    if (d > 2) return false;
    edges += d;
  }
  return edges / 2 + 1 == comp.size();
}

std::string decomposition_bounds(std::uint64_t seed, std::string& detail) {
  Rng rng(seed);
  std::size_t worst_s = 0, worst_p = 0;
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_non_cycle_graph(rng, 10);
    const std::size_t ml = testing::max_leaf_by_cds(g);
    const auto d = degree3_decomposition(g);
    if (d.cycle) return "non-cycle graph reported as a cycle";
    std::vector<Vertex> rest;
    std::set<Vertex> hi(d.high_degree.begin(), d.high_degree.end());
    for (Vertex v = 0; v < g.size(); ++v) {
      if (!hi.count(v)) rest.push_back(v);
    }
    const auto comps = connected_components(g, rest);
    if (comps.size() != d.paths.size()) return "path count differs from the components of G - S";
    for (const auto& c : comps) {
      if (!is_path_component(g, c)) return "a component of G - S is not a path";
    }
    if (hi.size() > 4 * ml) return "|S| above 4 ml on graph " + std::to_string(i);
    if (comps.size() > 5 * ml) return "path count above 5 ml on graph " + std::to_string(i);
    worst_s = std::max(worst_s, (hi.size() * 100) / ml);
    worst_p = std::max(worst_p, (comps.size() * 100) / ml);
  }
  detail = "max |S|/ml " + std::to_string(worst_s / 100.0).substr(0, 4) + ", max paths/ml " +
           std::to_string(worst_p / 100.0).substr(0, 4);
  return "";
}

std::string matching_suite(std::uint64_t seed, std::string& detail) {
  Rng rng(seed);
  for (int i = 0; i < 500; ++i) {
    const BipartiteGraph b = testing::random_bipartite(rng, 7);
    const MatchingResult r = max_matching_with_cover(b);
    if (r.size() != testing::matching_exhaustive(b)) return "matching not maximum on sample " + std::to_string(i);
    if (r.cover_size() != r.size()) return "cover size differs from matching size";
    std::set<std::size_t> l(r.left_cover.begin(), r.left_cover.end());
    std::set<std::size_t> rr(r.right_cover.begin(), r.right_cover.end());
    for (auto [u, v] : b.edges) {
      if (!l.count(u) && !rr.count(v)) return "uncovered edge on sample " + std::to_string(i);
    }
  }
  detail = "500 samples";
  return "";
}

std::string estimator_minimality(std::uint64_t seed, std::string& detail) {
  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = testing::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0);
    const VertexSet vc = min_vertex_cover(g);
    const VertexSet dc = dist_to_clique_set(g);
    const VertexSet cc = dist_to_co_cluster_set(g);
    if (!testing::is_vertex_cover(g, vc) || vc.size() != testing::min_vertex_cover_exhaustive(g)) {
      return "vertex cover not minimum on graph " + std::to_string(i);
    }
    if (!testing::leaves_clique(g, dc) || dc.size() != testing::dist_to_clique_exhaustive(g)) {
      return "distance to clique not minimum on graph " + std::to_string(i);
    }
    if (!testing::leaves_co_cluster(g, cc) || cc.size() != testing::dist_to_co_cluster_exhaustive(g)) {
      return "distance to co-cluster not minimum on graph " + std::to_string(i);
    }
  }
  detail = "100 graphs";
  return "";
}

// K_200 in color 0 plus 12 pairwise non-adjacent outside vertices colored 1
// and 2 alternately. Each clique vertex sees five outside vertices, so the
// motif {0, 1 x3, 2 x3} is NO: one clique vertex would have to see six. Every
// guess with at most three of each outside color fits the motif, so the NO
// case walks the whole subset enumeration. Clique vertices 0 and 1 are
// planted to cover three of each color, so a second 0 in the motif gives YES.
Instance big_clique_instance(Rng& rng, bool answer_yes) {
  constexpr Vertex kClique = 200, kOut = 12;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < kClique; ++u) {
    for (Vertex v = u + 1; v < kClique; ++v) edges.emplace_back(u, v);
  }
  std::vector<Vertex> outside(kOut);
  for (Vertex i = 0; i < kOut; ++i) outside[i] = i;
  for (Vertex c = 0; c < kClique; ++c) {
    if (c < 2) {
      for (Vertex i = 5 * c; i < 5 * c + 5; ++i) edges.emplace_back(c, kClique + i);
      continue;
    }
    std::shuffle(outside.begin(), outside.end(), rng);
    for (int j = 0; j < 5; ++j) edges.emplace_back(c, kClique + outside[j]);
  }
  Instance inst;
  inst.graph = Graph::from_edges(kClique + kOut, edges);
  inst.colors.assign(kClique, 0);
  for (Vertex i = 0; i < kOut; ++i) inst.colors.push_back(1 + i % 2);
  inst.motif.add(0, answer_yes ? 2 : 1);
  inst.motif.add(1, 3);
  inst.motif.add(2, 3);
  return inst;
}

std::string scaling(std::uint64_t seed, std::string& detail) {
  Rng rng(seed);
  std::ostringstream times;
  for (bool yes : {true, false}) {
    const Instance inst = big_clique_instance(rng, yes);
    const auto s = dist_to_clique_set(inst.graph, 24);
    if (!s || s->size() != 12) return "deletion set is not 12";
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome r = solve_dist_clique(inst);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.is_yes() != yes) return std::string("expected ") + (yes ? "YES" : "NO");
    if (r && !verify_solution(inst, r.witness())) return "witness fails";
    times << (yes ? ", YES in " : ", NO in ") << std::to_string(secs).substr(0, 5) << " s";
  }
  detail = "n = 212, k = 12" + times.str();
  return "";
}

}  // namespace
}  // namespace motif

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::uint64_t seed = 20240601;
  app.add_option("--seed", seed, "Base seed for every random draw");
  CLI11_PARSE(app, argc, argv);

  using namespace motif;
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence of six solvers against brute force", 120, oracle_equivalence},
      {2, "colored set cover with thresholds against exhaustive search", 10, csct_agreement},
      {3, "reduction soundness", 120, soundness},
      {4, "structural claims of generated instances", 5, claims},
      {5, "degree-3 decomposition bounds against max leaf number", 30, decomposition_bounds},
      {6, "matching and Konig cover", 10, matching_suite},
      {7, "estimator minimality", 30, estimator_minimality},
      {8, "distance-to-clique scaling at clique size 200", 60, scaling},
  };
  bool all = true;
  for (const auto& c : criteria) {
    std::string detail;
    std::string problem;
    const auto start = std::chrono::steady_clock::now();
    try {
      problem = c.run(seed + 1000 * static_cast<std::uint64_t>(c.id), detail);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && secs > c.limit_seconds) problem = "over the time limit";
    const bool ok = problem.empty();
    all = all && ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << ' ' << c.id << ": " << c.title << " (" << (ok ? detail : problem)
              << "; " << timing << ")" << std::endl;
  }
  return all ? 0 : 1;
}
