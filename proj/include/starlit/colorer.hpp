#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "starlit/coloring.hpp"
#include "starlit/cycles.hpp"
#include "starlit/decompose.hpp"
#include "starlit/multigraph.hpp"

namespace starlit {

/// Remaining admissible colors per edge while a coloring is being built. Always
/// a pointwise subset of the lists it started from.
using WorkingLists = ListAssignment;

/// Snapshot of one 2-connected body after it has been colored, handed to
/// ColorerOptions::on_body. References are valid only during the callback.
struct BodyAudit {
  const Multigraph& body;
  const std::vector<EdgeId>& cover_matching;
  const CactusDecomposition& cactus;
  const WorkingLists& initial;           // lists the body started from
  const WorkingLists& after_matching;    // after M' is colored and pruned
  const WorkingLists& after_connectors;  // after connectors are colored and pruned
  const EdgeColoring& coloring;          // total on the body
};

struct ColorerOptions {
  std::function<void(const BodyAudit&)> on_body;
  DiagnosticSink diagnostics;
};

/// Thrown by star_edge_color_list when a stage breaks an invariant the
/// construction guarantees. Carries everything needed to reproduce the run.
class ColoringFailure : public InvariantFailure {
 public:
  ColoringFailure(const std::string& what, std::string graph_text, std::string lists_text, std::vector<std::string> trace);

  const std::string& graph_text() const { return graph_text_; }
  const std::string& lists_text() const { return lists_text_; }
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  std::string graph_text_;
  std::string lists_text_;
  std::vector<std::string> trace_;
};

/// Star edge-coloring of a subcubic multigraph from lists of size >= 7.
///
/// Each component is stripped of pendant edges, completed to its supergraph,
/// and colored block by block: a pendant block is split off at its bridge, the
/// rest is colored first, the bridge gets a color unused within distance 2,
/// and the block is colored through its cactus decomposition. Peeled edges are
/// replayed last. The result is verified before it is returned.
///
/// Throws InputError when `g` is not subcubic or some list is too short, and
/// ColoringFailure when an internal stage fails.
EdgeColoring star_edge_color_list(const Multigraph& g, const ListAssignment& lists, const ColorerOptions& options = {});

/// Result of repeatedly deleting an edge at a degree-1 vertex.
struct PendantStrip {
  std::vector<EdgeId> core_edges;  // ascending
  std::vector<EdgeId> peel_order;  // deletion order
};

/// Always deletes at the least-indexed degree-1 vertex.
PendantStrip strip_pendant_edges(const Multigraph& g);

/// Colors the peeled edges in reverse deletion order, each with the least list
/// color not used within distance 2. `coloring` must already cover the core.
void replay_peeled_edges(const Multigraph& g, std::span<const EdgeId> peel_order, const ListAssignment& lists,
                         EdgeColoring& coloring);

/// Removes from every uncolored edge the colors that `newly_colored` places
/// within distance 2 of it.
WorkingLists prune_lists(const WorkingLists& lists, const EdgeColoring& newly_colored, const Multigraph& g);

/// Colors M' in ascending id order with least colors, keeping any two M' edges
/// within distance 2 apart.
EdgeColoring greedy_color_matching(std::span<const EdgeId> leftover_matching, const WorkingLists& lists,
                                   const Multigraph& g);

/// Colors connectors in ascending id order. A candidate color is skipped when
/// pruning it would leave some nearby 5-cycle of the cactus with fewer than
/// four colors in the union of its lists. `lists` must already be pruned by
/// the colored M' edges.
EdgeColoring color_connectors(const CactusDecomposition& cactus, const WorkingLists& lists, const Multigraph& g);

/// Star coloring of a bridgeless subcubic body with at most one degree-2
/// vertex from its working lists, via the cactus decomposition.
EdgeColoring color_two_connected_body(const Multigraph& body, const WorkingLists& lists,
                                      const ColorerOptions& options = {});

/// Colors one cactus cycle (edges in traversal order) from its lists: the
/// 5-cycle procedure for n = 5, the identical-lists constructor when all lists
/// agree, the general cycle procedure otherwise.
std::vector<Color> color_cactus_cycle(std::span<const ColorSet> lists, const DiagnosticSink& diag = {});

}  // namespace starlit
