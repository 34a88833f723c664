#include "motif/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "motif/errors.hpp"

namespace motif {

std::vector<std::string> tokenize_line(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

std::uint64_t parse_uint(const std::string& token, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError(std::string("expected non-negative integer for ") + what + ", got '" + token + "'");
  }
  return value;
}

namespace {

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::string at_line(std::size_t line_no) { return " (line " + std::to_string(line_no) + ")"; }

}  // namespace

Instance read_instance(std::istream& in) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::uint64_t> raw_colors;
  std::vector<bool> colored;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_motif;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokenize_line(line);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    if (kind == "p") {
      if (have_header) throw InputError("duplicate header" + at_line(line_no));
      if (tok.size() != 4 || tok[1] != "gm") throw InputError("malformed header, expected 'p gm <n> <m>'" + at_line(line_no));
      n = parse_uint(tok[2], "vertex count");
      m = parse_uint(tok[3], "edge count");
      raw_colors.assign(n, 0);
      colored.assign(n, false);
      have_header = true;
      continue;
    }
    if (!have_header) throw InputError("record before 'p gm' header" + at_line(line_no));
    if (tok.size() != 3) throw InputError("expected 3 fields in '" + kind + "' record" + at_line(line_no));
    const std::uint64_t a = parse_uint(tok[1], "first field");
    const std::uint64_t b = parse_uint(tok[2], "second field");
    if (kind == "e") {
      if (a >= n || b >= n) throw InputError("edge endpoint out of range" + at_line(line_no));
      if (a == b) throw InputError("self-loop" + at_line(line_no));
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    } else if (kind == "c") {
      if (a >= n) throw InputError("colored vertex out of range" + at_line(line_no));
      if (colored[a]) throw InputError("vertex colored twice" + at_line(line_no));
      colored[a] = true;
      raw_colors[a] = b;
    } else if (kind == "m") {
      if (b == 0) throw InputError("motif multiplicity must be at least 1" + at_line(line_no));
      raw_motif.emplace_back(a, b);
    } else {
      throw InputError("unknown record '" + kind + "'" + at_line(line_no));
    }
  }
  if (!have_header) throw InputError("missing 'p gm' header");
  if (edges.size() != m) {
    throw InputError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!colored[v]) throw InputError("vertex " + std::to_string(v) + " has no color");
  }
  if (raw_motif.empty()) throw InputError("empty motif");

  std::map<std::uint64_t, Color> dense;
  for (auto c : raw_colors) dense.emplace(c, 0);
  for (auto [c, mult] : raw_motif) dense.emplace(c, 0);
  Color next = 0;
  for (auto& [raw, id] : dense) id = next++;

  Instance inst;
  inst.graph = Graph::from_edges(n, edges);
  inst.colors.reserve(n);
  for (auto c : raw_colors) inst.colors.push_back(dense.at(c));
  std::vector<bool> seen(dense.size(), false);
  for (auto [c, mult] : raw_motif) {
    const Color id = dense.at(c);
    if (seen[id]) throw InputError("motif color " + std::to_string(c) + " listed twice");
    seen[id] = true;
    inst.motif.add(id, static_cast<std::uint32_t>(mult));
  }
  inst.validate();
  return inst;
}

Instance read_instance_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  const auto edges = inst.graph.edges();
  out << "p gm " << inst.graph.size() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
  for (Vertex v = 0; v < inst.graph.size(); ++v) out << "c " << v << ' ' << inst.colors[v] << '\n';
  for (auto [c, mult] : inst.motif.entries()) out << "m " << c << ' ' << mult << '\n';
}

VertexSet read_witness(std::istream& in) {
  VertexSet out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    for (const auto& tok : tokenize_line(line)) {
      if (first && tok == "YES") {
        first = false;
        continue;
      }
      first = false;
      out.push_back(static_cast<Vertex>(parse_uint(tok, "witness vertex")));
    }
  }
  return out;
}

VertexSet read_witness_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_witness(in);
}

std::vector<VertexSet> read_cliques(std::istream& in) {
  std::vector<VertexSet> out;
  std::string line;
  while (std::getline(in, line)) {
    auto tok = tokenize_line(line);
    if (tok.empty()) continue;
    VertexSet clique;
    for (const auto& t : tok) clique.push_back(static_cast<Vertex>(parse_uint(t, "clique vertex")));
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
  }
  return out;
}

std::vector<VertexSet> read_cliques_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_cliques(in);
}

void write_cliques(std::ostream& out, const std::vector<VertexSet>& cliques) {
  for (const auto& c : cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
}

}  // namespace motif
