#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starlit/multigraph.hpp"

namespace starlit {

/// Biconnected decomposition. Blocks are sorted edge lists ordered by their
/// least edge id; a bridge is a block with a single edge.
struct BlockStructure {
  std::vector<EdgeId> bridges;
  std::vector<std::vector<EdgeId>> blocks;
  std::vector<Vertex> cut_vertices;
  /// Block-cut tree adjacency: the cut vertices lying in each block.
  std::vector<std::vector<Vertex>> block_cut_vertices;
  /// Index into `blocks` for every edge.
  std::vector<std::size_t> block_of_edge;
};

BlockStructure block_decomposition(const Multigraph& g);

/// The input with degree-2 vertices paired up by new edges until at most one
/// remains. Original edges keep their ids; added edges follow them.
struct SupergraphResult {
  Multigraph graph;
  std::vector<EdgeId> added_edges;
};

/// Requires `g` connected, subcubic, minimum degree >= 2 (InputError
/// otherwise). Pairs degree-2 vertices in ascending index order.
SupergraphResult build_supergraph(const Multigraph& g);

/// Maximum-cardinality matching by augmenting paths with blossom contraction.
/// Parallel classes are collapsed; the least id of each matched class is
/// returned. Ascending ids.
std::vector<EdgeId> maximum_matching(const Multigraph& g);

/// Matching covering every degree-3 vertex of a connected, bridgeless,
/// subcubic graph with at most one vertex of degree below 3 (which must have
/// degree 2 and stays uncovered). InputError on a precondition breach,
/// InvariantFailure if no cover is found.
std::vector<EdgeId> petersen_cover_matching(const Multigraph& g);

/// Components of g - matching, each an edge sequence in traversal order
/// (consecutive edges share a vertex, and so do the last and first). Cycles
/// are ordered by their least vertex. InvariantFailure when some vertex does
/// not end up with degree 2.
std::vector<std::vector<EdgeId>> two_factor(const Multigraph& g, std::span<const EdgeId> matching);

/// Spanning cactus: 2-factor cycles joined by connector edges (a spanning tree
/// of the cycle-contracted graph, built from the matching in ascending id
/// order); the matching edges left over form M'.
struct CactusDecomposition {
  std::vector<std::vector<EdgeId>> cycles;
  std::vector<EdgeId> connectors;
  std::vector<EdgeId> leftover_matching;
};

CactusDecomposition spanning_cactus(const Multigraph& g, std::vector<std::vector<EdgeId>> cycles,
                                    std::span<const EdgeId> matching);

/// petersen_cover_matching, two_factor and spanning_cactus in sequence.
CactusDecomposition decompose_cactus(const Multigraph& g);

/// Checks every structural invariant of a cactus decomposition of `g`;
/// returns a description of the first one that fails.
std::optional<std::string> cactus_invariant_violation(const Multigraph& g, const CactusDecomposition& cactus);

}  // namespace starlit
