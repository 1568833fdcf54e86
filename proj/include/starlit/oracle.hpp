#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starlit/coloring.hpp"
#include "starlit/multigraph.hpp"

namespace starlit {

/// Fixture graphs: c5, cube_q3, k33, k4_subdivided_edge, complement_c6, k4,
/// petersen, prism, parallel_triple.
std::vector<std::string> named_graph_names();

/// Throws InputError for an unknown name.
Multigraph named_graph(std::string_view name);

struct OracleLimits {
  std::size_t max_edges = 20;
};

/// Backtracking search for a list-respecting star coloring. Edges are taken
/// in breadth-first order so each new edge touches colored ones; every
/// assignment is checked against the witnesses through that edge. Throws
/// InputError when the graph exceeds `limits.max_edges`.
std::optional<EdgeColoring> exhaustive_star_color(const Multigraph& g, const ListAssignment& lists,
                                                  OracleLimits limits = {});

/// Least k <= max_k such that g has a star coloring with colors {1..k}, or
/// nullopt. Uses value symmetry: each edge may open at most one new color.
std::optional<Color> star_chromatic_index(const Multigraph& g, Color max_k, OracleLimits limits = {});

}  // namespace starlit
