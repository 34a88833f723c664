// Serial vs OpenMP runs of the enumeration-heavy solvers. Arg 0 is serial,
// arg 1 parallel; the answers are identical by construction, only time differs.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "motif/solvers.hpp"

namespace {

using namespace motif;

SolverConfig config_for(Algorithm a, const benchmark::State& state) {
  SolverConfig c;
  c.algorithm = a;
  c.exec.mode = state.range(0) == 0 ? Execution::serial : Execution::parallel;
  return c;
}

// K_n in color 0 plus 12 outside vertices colored 1/2, each clique vertex
// seeing five of them; the motif needs one clique vertex seeing six, so NO
// after the full subset enumeration.
Instance clique_no_instance(Vertex clique) {
  std::mt19937_64 rng(11);
  constexpr Vertex kOut = 12;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < clique; ++u) {
    for (Vertex v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
  }
  std::vector<Vertex> outside(kOut);
  for (Vertex i = 0; i < kOut; ++i) outside[i] = i;
  for (Vertex c = 0; c < clique; ++c) {
    std::shuffle(outside.begin(), outside.end(), rng);
    for (int j = 0; j < 5; ++j) edges.emplace_back(c, clique + outside[j]);
  }
  Instance inst;
  inst.graph = Graph::from_edges(clique + kOut, edges);
  inst.colors.assign(clique, 0);
  for (Vertex i = 0; i < kOut; ++i) inst.colors.push_back(1 + i % 2);
  inst.motif.add(0);
  inst.motif.add(1, 3);
  inst.motif.add(2, 3);
  return inst;
}

// Sparse random graph with a small cover: a 14-vertex core, everything else
// hanging off it.
Instance cover_instance() {
  std::mt19937_64 rng(12);
  constexpr Vertex kCore = 14, kN = 60;
  std::vector<Edge> edges;
  for (Vertex v = 1; v < kCore; ++v) edges.emplace_back(rng() % v, v);
  for (Vertex v = kCore; v < kN; ++v) {
    edges.emplace_back(rng() % kCore, v);
    if (rng() % 2) edges.emplace_back(rng() % kCore, v);
  }
  Instance inst;
  inst.graph = Graph::from_edges(kN, edges);
  for (Vertex v = 0; v < kN; ++v) inst.colors.push_back(static_cast<Color>(rng() % 5));
  inst.motif.add(0, 2);
  inst.motif.add(1, 2);
  inst.motif.add(4, 3);
  return inst;
}

// A comb: a spine of `teeth` vertices, each with a pendant path of length 3.
Instance comb_instance(Vertex teeth) {
  std::vector<Edge> edges;
  Instance inst;
  for (Vertex i = 0; i + 1 < teeth; ++i) edges.emplace_back(i, i + 1);
  Vertex next = teeth;
  for (Vertex i = 0; i < teeth; ++i) {
    Vertex prev = i;
    for (int j = 0; j < 3; ++j) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  inst.graph = Graph::from_edges(next, edges);
  for (Vertex v = 0; v < next; ++v) inst.colors.push_back(v < teeth ? 0 : 1 + (v - teeth) % 3);
  inst.motif.add(0, 3);
  inst.motif.add(1, 2);
  inst.motif.add(3, 5);  // color 3 sits at tooth tips, too far apart: NO
  return inst;
}

void BM_DistClique(benchmark::State& state) {
  const Instance inst = clique_no_instance(static_cast<Vertex>(state.range(1)));
  const SolverConfig c = config_for(Algorithm::dist_clique, state);
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, c));
}
BENCHMARK(BM_DistClique)->ArgsProduct({{0, 1}, {50, 200}})->Unit(benchmark::kMillisecond);

void BM_VertexCover(benchmark::State& state) {
  const Instance inst = cover_instance();
  const SolverConfig c = config_for(Algorithm::vertex_cover, state);
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, c));
}
BENCHMARK(BM_VertexCover)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MaxLeaf(benchmark::State& state) {
  const Instance inst = comb_instance(10);
  const SolverConfig c = config_for(Algorithm::max_leaf, state);
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, c));
}
BENCHMARK(BM_MaxLeaf)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
