#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <string>

#include "motif/errors.hpp"
#include "motif/generators.hpp"
#include "motif/io.hpp"

namespace motif {

void X3cInstance::validate() const {
  if (q == 0) throw InputError("X3C needs q >= 1");
  for (const auto& t : triples) {
    for (auto e : t) {
      if (e >= 3 * q) throw InputError("X3C element " + std::to_string(e) + " outside the universe");
    }
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) throw InputError("X3C triple repeats an element");
  }
}

void SetSystem::validate() const {
  for (const auto& s : sets) {
    std::set<std::uint32_t> seen;
    for (auto e : s) {
      if (e >= universe) throw InputError("set element " + std::to_string(e) + " outside the universe");
      if (!seen.insert(e).second) throw InputError("set repeats an element");
    }
  }
}

void PartitionedGraph::validate() const {
  if (k < 2) throw InputError("partitioned graph needs at least two classes");
  if (t == 0) throw InputError("partitioned graph classes must be nonempty");
  const std::size_t n = k * t;
  std::set<std::pair<std::uint32_t, std::uint32_t>> allowed;
  if (pattern) {
    for (auto [i, j] : *pattern) {
      if (i >= j || j >= k) throw InputError("pattern pair must satisfy i < j < k");
      if (!allowed.emplace(i, j).second) throw InputError("repeated pattern pair");
    }
  }
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("partitioned graph vertex out of range");
    const auto a = static_cast<std::uint32_t>(std::min(class_of(u), class_of(v)));
    const auto b = static_cast<std::uint32_t>(std::max(class_of(u), class_of(v)));
    if (a == b) throw InputError("edge inside a class");
    if (pattern && !allowed.count({a, b})) throw InputError("edge outside the pattern");
  }
}

void write_certificate(std::ostream& out, const GeneratedInstance& g) {
  for (const auto& [token, v] : g.certificate) out << "map " << token << ' ' << v << '\n';
  for (const auto& [param, value] : g.claims) out << "claim " << param << ' ' << value << '\n';
  for (const auto& w : g.warnings) out << "warning " << w << '\n';
}

namespace {

// Nonempty token lines of a stream with their line numbers.
class Lines {
 public:
  explicit Lines(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tok) {
    std::string line;
    while (std::getline(in_, line)) {
      ++no_;
      tok = tokenize_line(line);
      if (!tok.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(what + " (line " + std::to_string(no_) + ")");
  }

  void expect(const std::vector<std::string>& tok, const char* kind, std::size_t fields) const {
    if (tok[0] != kind) fail(std::string("expected '") + kind + "' record");
    if (fields != 0 && tok.size() != fields) fail(std::string("wrong field count in '") + kind + "' record");
  }

 private:
  std::istream& in_;
  std::size_t no_ = 0;
};

std::uint32_t u32(const std::string& s, const char* what) { return static_cast<std::uint32_t>(parse_uint(s, what)); }

}  // namespace

std::vector<X3cInstance> read_x3c_sources(std::istream& in) {
  Lines lines(in);
  std::vector<std::string> tok;
  std::vector<X3cInstance> out;
  while (lines.next(tok)) {
    lines.expect(tok, "x3c", 3);
    X3cInstance x;
    x.q = parse_uint(tok[1], "q");
    const std::size_t num = parse_uint(tok[2], "triple count");
    for (std::size_t i = 0; i < num; ++i) {
      if (!lines.next(tok)) lines.fail("missing triple");
      lines.expect(tok, "t", 4);
      x.triples.push_back({u32(tok[1], "element"), u32(tok[2], "element"), u32(tok[3], "element")});
    }
    x.validate();
    out.push_back(std::move(x));
  }
  if (out.empty()) throw InputError("no 'x3c' block found");
  return out;
}

SetSystem read_set_system(std::istream& in) {
  Lines lines(in);
  std::vector<std::string> tok;
  if (!lines.next(tok)) throw InputError("empty set-system file");
  lines.expect(tok, "sets", 4);
  SetSystem s;
  s.universe = parse_uint(tok[1], "universe size");
  const std::size_t m = parse_uint(tok[2], "set count");
  s.budget = parse_uint(tok[3], "budget");
  while (lines.next(tok)) {
    lines.expect(tok, "s", 0);
    std::vector<std::uint32_t> set;
    for (std::size_t i = 1; i < tok.size(); ++i) set.push_back(u32(tok[i], "element"));
    s.sets.push_back(std::move(set));
  }
  if (s.sets.size() != m) throw InputError("set count does not match header");
  s.validate();
  return s;
}

PartitionedGraph read_partitioned_graph(std::istream& in) {
  Lines lines(in);
  std::vector<std::string> tok;
  if (!lines.next(tok)) throw InputError("empty partitioned-graph file");
  lines.expect(tok, "pg", 4);
  PartitionedGraph p;
  p.k = parse_uint(tok[1], "class count");
  p.t = parse_uint(tok[2], "class size");
  const std::size_t m = parse_uint(tok[3], "edge count");
  while (lines.next(tok)) {
    if (tok[0] == "e") {
      lines.expect(tok, "e", 3);
      p.edges.emplace_back(u32(tok[1], "vertex"), u32(tok[2], "vertex"));
    } else {
      lines.expect(tok, "p", 3);
      if (!p.pattern) p.pattern.emplace();
      p.pattern->emplace_back(u32(tok[1], "class"), u32(tok[2], "class"));
    }
  }
  if (p.edges.size() != m) throw InputError("edge count does not match header");
  p.validate();
  return p;
}

DomsetSource read_domset_source(std::istream& in) {
  Lines lines(in);
  std::vector<std::string> tok;
  if (!lines.next(tok)) throw InputError("empty graph file");
  lines.expect(tok, "g", 4);
  const std::size_t n = parse_uint(tok[1], "vertex count");
  const std::size_t m = parse_uint(tok[2], "edge count");
  DomsetSource s;
  s.budget = parse_uint(tok[3], "budget");
  std::vector<Edge> edges;
  while (lines.next(tok)) {
    lines.expect(tok, "e", 3);
    edges.emplace_back(u32(tok[1], "vertex"), u32(tok[2], "vertex"));
  }
  if (edges.size() != m) throw InputError("edge count does not match header");
  s.graph = Graph::from_edges(n, edges);
  return s;
}

}  // namespace motif
