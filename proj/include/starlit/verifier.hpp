#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "starlit/coloring.hpp"
#include "starlit/multigraph.hpp"

namespace starlit {

enum class ViolationKind { improper, bichromatic_path, bichromatic_cycle };

std::string_view to_string(ViolationKind kind);

/// A witness that a coloring is not a star edge-coloring.
///
/// `improper` carries the two adjacent edges sharing a color (ascending ids).
/// The bichromatic kinds carry four edges in walk order: a path visits five
/// distinct vertices, a cycle four distinct vertices and returns to its start.
/// Among the orientations and rotations of the same walk the lexicographically
/// least edge sequence is reported.
struct Violation {
  ViolationKind kind = ViolationKind::improper;
  std::vector<EdgeId> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks a total coloring. Throws InputError when `c` leaves an edge
/// uncolored or does not match the edge count of `g`.
///
/// Improper pairs take precedence; otherwise the least canonical 4-edge witness
/// over all paths and cycles is returned.
std::optional<Violation> find_violation(const Multigraph& g, const EdgeColoring& c);

/// Same predicate restricted to witnesses whose edges are all colored.
std::optional<Violation> find_violation_partial(const Multigraph& g, const EdgeColoring& c);

/// Only witnesses that contain `e`. A coloring that was violation-free before
/// `e` was colored is violation-free afterwards iff this returns nullopt.
std::optional<Violation> find_violation_involving(const Multigraph& g, const EdgeColoring& c, EdgeId e);

/// True iff every colored edge carries a color from its list. Throws
/// InputError when a colored edge has no list.
bool respects_lists(const EdgeColoring& c, const ListAssignment& lists);

}  // namespace starlit
