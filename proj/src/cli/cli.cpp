#include "motif/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "motif/errors.hpp"
#include "motif/estimators.hpp"
#include "motif/generators.hpp"
#include "motif/io.hpp"

namespace motif {

namespace {

namespace fs = std::filesystem;

// Largest high-degree set over the components (0 on paths and cycles).
std::size_t high_degree_parameter(const Graph& g) {
  std::size_t worst = 0;
  for (const auto& comp : connected_components(g)) {
    const Graph sub = g.induced(comp);
    std::size_t high = 0;
    for (Vertex v = 0; v < sub.size(); ++v) high += sub.degree(v) >= 3;
    worst = std::max(worst, high);
  }
  return worst;
}

}  // namespace

AutoChoice choose_algorithm(const Instance& inst, const std::optional<std::vector<VertexSet>>& vertex_clique_cover,
                            const std::optional<std::vector<VertexSet>>& edge_clique_cover, std::size_t max_parameter,
                            const Budget& estimate_budget, std::vector<std::string>* notes) {
  const Graph& g = inst.graph;
  const double log_n = std::log2(static_cast<double>(std::max<std::size_t>(g.size(), 2)));
  struct Candidate {
    AutoChoice choice;
    double log_cost;
  };
  std::vector<Candidate> c;
  if (auto s = dist_to_clique_set(g, max_parameter)) {
    c.push_back({{Algorithm::dist_clique, "distance-to-clique", s->size()}, std::log2(3.0) * s->size()});
  }
  if (auto s = min_vertex_cover(g, max_parameter)) {
    c.push_back({{Algorithm::vertex_cover, "vertex-cover", s->size()}, 2.0 * s->size()});
  }
  try {
    if (auto s = dist_to_co_cluster_set(g, max_parameter, estimate_budget)) {
      c.push_back({{Algorithm::co_cluster, "distance-to-co-cluster", s->size()}, std::log2(3.0) * s->size() + 2 * log_n});
    }
  } catch (const BudgetExceeded&) {
    if (notes) notes->push_back("distance-to-co-cluster estimate timed out, skipped");
  }
  if (const std::size_t h = high_degree_parameter(g); h <= std::min<std::size_t>(max_parameter, 62)) {
    c.push_back({{Algorithm::max_leaf, "high-degree-vertices", h}, h + log_n});
  }
  if (vertex_clique_cover && vertex_clique_cover->size() <= max_parameter) {
    const std::size_t k = vertex_clique_cover->size();
    c.push_back({{Algorithm::vertex_clique_cover, "vertex-clique-cover", k}, 3.0 * k});
  }
  if (edge_clique_cover) {
    const std::size_t k = edge_clique_cover->size();
    c.push_back({{Algorithm::edge_clique_cover, "edge-clique-cover", k}, 3.0 * k});
  }
  if (g.size() <= kBruteMaxVertices) {
    c.push_back({{Algorithm::brute, "vertices", g.size()}, static_cast<double>(g.size())});
  }
  if (c.empty()) throw CapacityError("no parameter below the enumeration cap and too many vertices for brute force");
  // stable: ties keep the listing order above
  const auto best = std::min_element(c.begin(), c.end(), [](const Candidate& a, const Candidate& b) {
    return a.log_cost < b.log_cost;
  });
  return best->choice;
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Algorithm algorithm_or_throw(const std::string& name) {
  auto a = parse_algorithm(name);
  if (!a) throw InputError("unknown algorithm '" + name + "'");
  return *a;
}

void print_outcome(std::ostream& out, const SolveOutcome& r) {
  if (!r) {
    out << "NO\n";
    return;
  }
  out << "YES\n";
  const auto& w = r.witness();
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
  out << '\n';
}

constexpr double kAutoEstimateSeconds = 2.0;

struct SolveArgs {
  std::string instance;
  std::string algo = "auto";
  std::string vertex_cover_file;
  std::string edge_cover_file;
  double timeout = 0;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = read_instance_file(a.instance);
  inst.validate();
  SolverConfig cfg;
  if (!a.vertex_cover_file.empty()) cfg.vertex_clique_cover = read_cliques_file(a.vertex_cover_file);
  if (!a.edge_cover_file.empty()) cfg.edge_clique_cover = read_cliques_file(a.edge_cover_file);
  if (a.timeout > 0) cfg.exec.budget = Budget::seconds(a.timeout);
  if (a.algo == "auto") {
    std::vector<std::string> notes;
    const AutoChoice choice = choose_algorithm(inst, cfg.vertex_clique_cover, cfg.edge_clique_cover, cfg.max_parameter,
                                               Budget::seconds(kAutoEstimateSeconds), &notes);
    for (const auto& n : notes) err << "auto: " << n << '\n';
    err << "auto: " << choice.parameter << " = " << choice.value << ", algorithm " << to_string(choice.algorithm) << '\n';
    cfg.algorithm = choice.algorithm;
  } else {
    cfg.algorithm = algorithm_or_throw(a.algo);
  }
  const SolveOutcome r = solve(inst, cfg);
  print_outcome(out, r);
  return r ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& instance, const std::string& witness, std::ostream& out) {
  const Instance inst = read_instance_file(instance);
  inst.validate();
  const VertexSet r = read_witness_file(witness);
  const Violation v = check_solution(inst, r);
  if (v == Violation::none) {
    out << "OK\n";
    return kExitYes;
  }
  out << to_string(v) << '\n';
  return kExitNo;
}

struct GenerateArgs {
  std::string name;
  std::string source;
  std::string output;
  std::string certificate;
  bool colorful = false;
  bool multiset = false;
  std::string variant = "cluster";
  std::optional<std::uint32_t> root;
};

std::ifstream open_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

X3cInstance single_x3c(const std::string& path) {
  auto in = open_source(path);
  auto xs = read_x3c_sources(in);
  if (xs.size() != 1) throw InputError("expected exactly one x3c block");
  return xs.front();
}

SetSystem set_system(const std::string& path) {
  auto in = open_source(path);
  return read_set_system(in);
}

GeneratedInstance generate(const GenerateArgs& a) {
  if (a.name == "x3c-paths") return gen_x3c_paths(single_x3c(a.source));
  if (a.name == "x3c-comb") return gen_x3c_comb(single_x3c(a.source));
  if (a.name == "x3c-superstar") return gen_x3c_superstar_cliques(single_x3c(a.source), !a.multiset);
  if (a.name == "domset-gadget") {
    if (!a.root) throw InputError("domset-gadget needs --root");
    return gen_domset_gadget(read_instance_file(a.source), *a.root);
  }
  if (a.name == "domset-reduction") {
    auto in = open_source(a.source);
    const DomsetSource s = read_domset_source(in);
    if (a.variant != "cluster" && a.variant != "tree") throw InputError("variant must be cluster or tree");
    return gen_domset_reduction(s, a.variant == "tree" ? DomsetVariant::tree : DomsetVariant::cluster);
  }
  if (a.name == "hitting-set-split") return gen_hitting_set_split(set_system(a.source));
  if (a.name == "set-cover-split") return gen_set_cover_split(set_system(a.source));
  if (a.name == "mcc-star") {
    auto in = open_source(a.source);
    return gen_mcc_star(read_partitioned_graph(in));
  }
  if (a.name == "or-composition") {
    auto in = open_source(a.source);
    return gen_or_composition(read_x3c_sources(in), a.colorful);
  }
  throw InputError("unknown reduction '" + a.name + "'");
}

void write_to(const std::string& path, const std::function<void(std::ostream&)>& f) {
  std::ofstream o(path);
  if (!o) throw InputError("cannot write " + path);
  f(o);
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const GeneratedInstance g = generate(a);
  std::string cert_path = a.certificate;
  if (cert_path.empty() && !a.output.empty()) cert_path = a.output + ".cert";
  if (a.output.empty()) {
    write_instance(out, g.instance);
  } else {
    write_to(a.output, [&](std::ostream& o) { write_instance(o, g.instance); });
  }
  if (cert_path.empty()) {
    write_certificate(err, g);
  } else {
    write_to(cert_path, [&](std::ostream& o) { write_certificate(o, g); });
  }
  for (const auto& w : g.warnings) err << "warning: " << w << '\n';
  return 0;
}

int cmd_params(const std::string& instance, const std::string& vcc_file, const std::string& ecc_file,
               std::size_t max_size, double timeout, std::ostream& out) {
  const Instance inst = read_instance_file(instance);
  inst.validate();
  std::optional<std::vector<VertexSet>> vcc;
  std::optional<std::vector<VertexSet>> ecc;
  if (!vcc_file.empty()) vcc = read_cliques_file(vcc_file);
  if (!ecc_file.empty()) ecc = read_cliques_file(ecc_file);
  const ParamReport r = compute_param_report(inst.graph, max_size, vcc ? &*vcc : nullptr, ecc ? &*ecc : nullptr,
                                             timeout > 0 ? Budget::seconds(timeout) : Budget{});
  auto size_line = [&](const char* label, const std::optional<VertexSet>& s) {
    out << label << ' ';
    if (s) {
      out << s->size() << '\n';
    } else {
      out << ">" << max_size << '\n';
    }
  };
  out << "vertices " << r.vertices << '\n';
  out << "edges " << r.edges << '\n';
  out << "motif-size " << inst.motif.total() << '\n';
  size_line("vertex-cover", r.vertex_cover);
  size_line("distance-to-clique", r.dist_to_clique);
  if (r.dist_to_co_cluster_timed_out) {
    out << "distance-to-co-cluster unknown\n";
  } else {
    size_line("distance-to-co-cluster", r.dist_to_co_cluster);
  }
  out << "high-degree-vertices " << high_degree_parameter(inst.graph) << '\n';
  if (r.decomposition) {
    out << "degree3-paths " << r.decomposition->paths.size() << '\n';
    out << "cycle " << (r.decomposition->cycle ? "yes" : "no") << '\n';
  }
  if (r.vertex_clique_cover_valid) {
    out << "vertex-clique-cover " << (*r.vertex_clique_cover_valid ? std::to_string(vcc->size()) : "invalid") << '\n';
  }
  if (r.edge_clique_cover_valid) {
    out << "edge-clique-cover " << (*r.edge_clique_cover_valid ? std::to_string(ecc->size()) : "invalid") << '\n';
  }
  return 0;
}

struct BenchCell {
  std::string answer;  // YES, NO, TO, CAP, ERR
  double ms = 0;
};

int cmd_bench(const std::string& dir, const std::string& algos, double timeout, std::ostream& out) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    // generate drops certificates next to instances; those are not inputs.
    if (e.is_regular_file() && e.path().extension() != ".cert") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Algorithm> list;
  for (const auto& name : split_list(algos)) list.push_back(algorithm_or_throw(name));

  std::vector<Instance> instances;
  for (const auto& f : files) {
    instances.push_back(read_instance_file(f));
    instances.back().validate();
  }
  std::vector<BenchCell> cells(files.size() * list.size());
  const auto total = static_cast<std::int64_t>(cells.size());

  // Cells run in parallel; each solve is serial inside.
#pragma omp parallel for schedule(dynamic, 1) num_threads(omp_threads_default())
  for (std::int64_t k = 0; k < total; ++k) {
    const std::size_t fi = static_cast<std::size_t>(k) / list.size();
    const Algorithm alg = list[static_cast<std::size_t>(k) % list.size()];
    const Instance& inst = instances[fi];
    SolverConfig cfg;
    cfg.algorithm = alg;
    cfg.exec.mode = Execution::serial;
    cfg.exec.budget = Budget::seconds(std::max(timeout, 0.0));
    BenchCell& cell = cells[static_cast<std::size_t>(k)];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      if (alg == Algorithm::vertex_clique_cover) cfg.vertex_clique_cover = greedy_vertex_clique_cover(inst.graph);
      if (alg == Algorithm::edge_clique_cover) cfg.edge_clique_cover = edge_clique_cover_from_edges(inst.graph);
      cell.answer = solve(inst, cfg) ? "YES" : "NO";
    } catch (const BudgetExceeded&) {
      cell.answer = "TO";
    } catch (const CapacityError&) {
      cell.answer = "CAP";
    } catch (const std::exception&) {
      cell.answer = "ERR";
    }
    cell.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }

  bool disagreement = false;
  out << std::left << std::setw(28) << "instance" << std::setw(12) << "algo" << std::setw(8) << "answer"
      << std::setw(12) << "ms" << "agreement\n";
  for (std::size_t fi = 0; fi < files.size(); ++fi) {
    std::string seen;
    bool agree = true;
    for (std::size_t ai = 0; ai < list.size(); ++ai) {
      const auto& a = cells[fi * list.size() + ai].answer;
      if (a != "YES" && a != "NO") continue;
      if (seen.empty()) seen = a;
      agree = agree && a == seen;
    }
    disagreement = disagreement || !agree;
    for (std::size_t ai = 0; ai < list.size(); ++ai) {
      const BenchCell& c = cells[fi * list.size() + ai];
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(2) << c.ms;
      out << std::left << std::setw(28) << files[fi].filename().string() << std::setw(12) << to_string(list[ai])
          << std::setw(8) << c.answer << std::setw(12) << ms.str() << (agree ? "agree" : "DISAGREE") << '\n';
    }
  }
  return disagreement ? 1 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers and reduction generators for Graph Motif", "motif_kit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance; prints YES and a witness, or NO");
  solve_cmd->add_option("instance", solve_args.instance, "Instance file")->required();
  solve_cmd->add_option("--algo", solve_args.algo, "auto, brute, dist-clique, vc, ecc, vcc, cocluster or maxleaf");
  solve_cmd->add_option("--vertex-clique-cover", solve_args.vertex_cover_file, "Clique partition file (vcc)");
  solve_cmd->add_option("--edge-clique-cover", solve_args.edge_cover_file, "Edge clique cover file (ecc)");
  solve_cmd->add_option("--timeout", solve_args.timeout, "Seconds; 0 for none");

  std::string verify_instance;
  std::string verify_witness;
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness against an instance");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("witness", verify_witness, "Witness file")->required();

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Build an instance from a source problem");
  gen_cmd->add_option("reduction", gen.name,
                      "x3c-paths, x3c-comb, x3c-superstar, domset-gadget, domset-reduction, hitting-set-split, "
                      "set-cover-split, mcc-star or or-composition")
      ->required();
  gen_cmd->add_option("source", gen.source, "Source file")->required();
  gen_cmd->add_option("-o,--output", gen.output, "Instance output (default stdout)");
  gen_cmd->add_option("-c,--certificate", gen.certificate, "Certificate output (default <output>.cert, else stderr)");
  gen_cmd->add_flag("--colorful", gen.colorful, "or-composition: colorful variant");
  gen_cmd->add_flag("--multiset", gen.multiset, "x3c-superstar: one set vertex per clique");
  gen_cmd->add_option("--variant", gen.variant, "domset-reduction: cluster or tree");
  gen_cmd->add_option("--root", gen.root, "domset-gadget: root vertex");

  std::string params_instance;
  std::string params_vcc;
  std::string params_ecc;
  std::size_t params_max = 24;
  double params_timeout = 10;
  auto* params_cmd = app.add_subcommand("params", "Report structural parameters");
  params_cmd->add_option("instance", params_instance, "Instance file")->required();
  params_cmd->add_option("--vertex-clique-cover", params_vcc, "Clique partition file to validate");
  params_cmd->add_option("--edge-clique-cover", params_ecc, "Edge clique cover file to validate");
  params_cmd->add_option("--max", params_max, "Search cap for the exact parameters");
  params_cmd->add_option("--timeout", params_timeout, "Seconds for the co-cluster search, 0 for none");

  std::string bench_dir;
  std::string bench_algos = "brute,dist-clique,vc,cocluster,maxleaf";
  double bench_timeout = 10;
  auto* bench_cmd = app.add_subcommand("bench", "Run algorithms over a directory of instances");
  bench_cmd->add_option("directory", bench_dir, "Directory of instance files")->required();
  bench_cmd->add_option("--algo", bench_algos, "Comma-separated algorithm list");
  bench_cmd->add_option("--timeout", bench_timeout, "Seconds per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out, err);
    if (*verify_cmd) return cmd_verify(verify_instance, verify_witness, out);
    if (*gen_cmd) return cmd_generate(gen, out, err);
    if (*params_cmd) return cmd_params(params_instance, params_vcc, params_ecc, params_max, params_timeout, out);
    if (*bench_cmd) return cmd_bench(bench_dir, bench_algos, bench_timeout, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const BudgetExceeded& e) {
    err << "timeout: " << e.what() << '\n';
    return kExitCapacity;
  }
  return kExitParse;
}

}  // namespace motif
