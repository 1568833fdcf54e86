#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starlit/multigraph.hpp"
#include "starlit/types.hpp"

namespace starlit {

/// Lists of a cycle e_0 ... e_{n-1}, where e_i is adjacent to e_{i-1} and
/// e_{i+1} (mod n). n = 2 is a pair of parallel edges.
struct CycleInstance {
  std::vector<ColorSet> lists;

  std::size_t length() const { return lists.size(); }
};

/// Receives a message whenever a constructive procedure fails its self-check
/// and the exact search is used instead.
using DiagnosticSink = std::function<void(const std::string&)>;

/// The cycle C_n as a multigraph: edge i joins vertices i and i+1 (mod n).
Multigraph cycle_graph(std::size_t n);

/// True iff `colors` is a star edge-coloring of C_n, n = colors.size().
bool is_star_cycle_coloring(std::span<const Color> colors);

/// Star list-coloring of a cycle with lists of size >= 3, n != 5, and some
/// adjacent pair of unequal lists.
///
/// The cycle is relabelled so that the first edge has a color missing from its
/// predecessor's list; odd positions are chained so consecutive odd edges
/// differ, then even positions are filled. Lengths up to 4 go straight to the
/// exact search. Throws InputError on a precondition breach.
std::vector<Color> color_cycle_lists(const CycleInstance& inst, const DiagnosticSink& diag = {});

/// Star coloring of C_n (n >= 2, n != 5) from the three least colors of
/// `palette`: the repeating 3-pattern when 3 divides n, exact search
/// otherwise.
std::vector<Color> color_cycle_identical_lists(std::size_t n, const ColorSet& palette);

/// Star list-coloring of C_5 with lists of size >= 3 whose union has at least
/// four colors, by the odd-cycle branch of the cycle procedure. Identical
/// lists get the pattern a b c a d from their four least colors.
std::vector<Color> color_five_cycle(const CycleInstance& inst, const DiagnosticSink& diag = {});

/// Exact feasibility search. Returns the lexicographically least
/// list-respecting star coloring, or nullopt when none exists.
std::optional<std::vector<Color>> dp_cycle_color(const CycleInstance& inst);

}  // namespace starlit
