#pragma once

#include <cstdint>
#include <random>

#include "starlit/coloring.hpp"
#include "starlit/multigraph.hpp"

namespace starlit {

/// Random cubic multigraph on an even number of vertices from the pairing
/// model: 3n half-edges are matched uniformly and the pairing is resampled
/// while it has a loop (or, unless `allow_parallel`, a repeated pair).
Multigraph random_cubic(std::size_t n, std::mt19937_64& rng, bool allow_parallel);

/// A random cubic pairing on n vertices (n - 1 when n is odd) with each edge
/// deleted with probability `delete_prob`; the largest component is kept and
/// relabelled in vertex order. Degree <= 3 by construction.
Multigraph random_subcubic(std::size_t n, std::mt19937_64& rng, double delete_prob, bool allow_parallel);

/// Every edge gets a uniform random `list_size`-subset of {1..palette}.
ListAssignment random_lists(std::size_t edge_count, std::size_t list_size, Color palette, std::mt19937_64& rng);

}  // namespace starlit
