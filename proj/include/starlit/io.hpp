#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "starlit/coloring.hpp"
#include "starlit/multigraph.hpp"

namespace starlit {

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored everywhere.
//
//   graph:    p <n> <m>, then exactly m lines e <u> <v> (0-based); the i-th
//             e line is edge i, repeated pairs are parallel edges
//   lists:    l <edge_id> <c1> ... <ck>, one line per edge
//   coloring: c <edge_id> <color>, any subset of edges
//
// Readers throw InputError with the offending line number.

Multigraph read_graph(std::istream& in);
ListAssignment read_lists(std::istream& in, std::size_t edge_count);
EdgeColoring read_coloring(std::istream& in, std::size_t edge_count);

void write_graph(std::ostream& out, const Multigraph& g);
void write_lists(std::ostream& out, const ListAssignment& lists);
void write_coloring(std::ostream& out, const EdgeColoring& c);

std::string format_graph(const Multigraph& g);
std::string format_lists(const ListAssignment& lists);
std::string format_coloring(const EdgeColoring& c);

Multigraph load_graph(const std::filesystem::path& path);
ListAssignment load_lists(const std::filesystem::path& path, std::size_t edge_count);
EdgeColoring load_coloring(const std::filesystem::path& path, std::size_t edge_count);

}  // namespace starlit
