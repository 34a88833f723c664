#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "motif/instance.hpp"

namespace motif {

/// Canonical line-oriented instance format:
///
///   p gm <n> <m>
///   e <u> <v>          one line per edge, 0-indexed
///   c <v> <color>      one line per vertex
///   m <color> <mult>   one line per motif color, mult >= 1
///
/// `#` starts a comment. External color ids may be sparse; they are mapped to
/// dense ids in increasing order. Throws InputError on any violation.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::filesystem::path& path);

void write_instance(std::ostream& out, const Instance& inst);

/// Whitespace-separated vertex ids. A leading `YES` token (solver output) is
/// skipped so that `solve` output can be fed back to `verify`.
VertexSet read_witness(std::istream& in);
VertexSet read_witness_file(const std::filesystem::path& path);

/// Clique list file: one clique per line, whitespace-separated vertex ids.
std::vector<VertexSet> read_cliques(std::istream& in);
std::vector<VertexSet> read_cliques_file(const std::filesystem::path& path);
void write_cliques(std::ostream& out, const std::vector<VertexSet>& cliques);

/// Splits a line into whitespace tokens after stripping `#` comments.
std::vector<std::string> tokenize_line(const std::string& line);

/// Parses a non-negative integer token, throwing InputError with `what`.
std::uint64_t parse_uint(const std::string& token, const char* what);

}  // namespace motif
