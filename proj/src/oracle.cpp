#include "starlit/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "starlit/verifier.hpp"

namespace starlit {
namespace {

Multigraph from_pairs(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  Multigraph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

// Edges in BFS order over the line graph, restarted at the least unvisited
// edge for every component.
std::vector<EdgeId> search_order(const Multigraph& g) {
  std::vector<bool> seen(g.edge_count(), false);
  std::vector<EdgeId> order;
  for (std::size_t s = 0; s < g.edge_count(); ++s) {
    if (seen[s]) continue;
    std::deque<EdgeId> queue{EdgeId{s}};
    seen[s] = true;
    while (!queue.empty()) {
      const EdgeId e = queue.front();
      queue.pop_front();
      order.push_back(e);
      for (EdgeId f : g.edges_within_distance(e, 1)) {
        if (!seen[f.index()]) {
          seen[f.index()] = true;
          queue.push_back(f);
        }
      }
    }
  }
  return order;
}

class Search {
 public:
  Search(const Multigraph& g, const ListAssignment& lists, bool symmetric)
      : g_(g), lists_(lists), symmetric_(symmetric), order_(search_order(g)), coloring_(g.edge_count()) {}

  std::optional<EdgeColoring> run() {
    if (place(0, 0)) return coloring_;
    return std::nullopt;
  }

 private:
  // `opened` is the largest color used so far (palette {1..k} only).
  bool place(std::size_t depth, Color opened) {
    if (depth == order_.size()) return true;
    const EdgeId e = order_[depth];
    for (Color c : lists_[e]) {
      if (symmetric_ && c > opened + 1) break;
      coloring_.set(e, c);
      if (!find_violation_involving(g_, coloring_, e) && place(depth + 1, std::max(opened, c))) return true;
    }
    coloring_.clear(e);
    return false;
  }

  const Multigraph& g_;
  const ListAssignment& lists_;
  bool symmetric_;
  std::vector<EdgeId> order_;
  EdgeColoring coloring_;
};

void check_size(const Multigraph& g, const OracleLimits& limits) {
  if (g.edge_count() > limits.max_edges) {
    throw InputError("exhaustive search limited to " + std::to_string(limits.max_edges) + " edges, graph has " +
                     std::to_string(g.edge_count()));
  }
}

}  // namespace

std::vector<std::string> named_graph_names() {
  return {"c5", "cube_q3", "k33", "k4_subdivided_edge", "complement_c6", "k4", "petersen", "prism", "parallel_triple"};
}

Multigraph named_graph(std::string_view name) {
  if (name == "c5") return from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  if (name == "k4") return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "k33") {
    return from_pairs(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  }
  if (name == "k4_subdivided_edge") {
    // K4 on {0,1,2,3} with edge 0-1 replaced by the path 0-4-1.
    return from_pairs(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  if (name == "complement_c6") {
    // C6 is 0-1-2-3-4-5-0; these are the nine non-adjacent pairs.
    return from_pairs(6, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
  }
  if (name == "prism") {
    return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (name == "cube_q3") {
    Multigraph g(8);
    for (Vertex v = 0; v < 8; ++v) {
      for (Vertex bit = 1; bit < 8; bit <<= 1) {
        if ((v & bit) == 0) g.add_edge(v, v | bit);
      }
    }
    return g;
  }
  if (name == "petersen") {
    return from_pairs(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  }
  if (name == "parallel_triple") return from_pairs(2, {{0, 1}, {0, 1}, {0, 1}});
  throw InputError("unknown named graph '" + std::string(name) + "'");
}

std::optional<EdgeColoring> exhaustive_star_color(const Multigraph& g, const ListAssignment& lists, OracleLimits limits) {
  check_size(g, limits);
  if (lists.edge_count() != g.edge_count()) throw InputError("list assignment does not match the graph");
  return Search(g, lists, false).run();
}

std::optional<Color> star_chromatic_index(const Multigraph& g, Color max_k, OracleLimits limits) {
  check_size(g, limits);
  for (Color k = 0; k <= max_k; ++k) {
    const auto lists = ListAssignment::uniform(g.edge_count(), k);
    if (Search(g, lists, true).run()) return k;
  }
  return std::nullopt;
}

}  // namespace starlit
