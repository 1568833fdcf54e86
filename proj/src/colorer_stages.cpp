#include <algorithm>
#include <queue>
#include <string>

#include "starlit/colorer.hpp"
#include "starlit/verifier.hpp"

namespace starlit {
namespace {

std::optional<Color> least_unused(const ColorSet& list, const ColorSet& used) {
  for (Color c : list) {
    if (!used.contains(c)) return c;
  }
  return std::nullopt;
}

ColorSet colors_near(const Multigraph& g, EdgeId e, const EdgeColoring& c) {
  ColorSet used;
  for (EdgeId f : g.edges_within_distance(e, 2)) {
    if (auto col = c.get(f)) used.insert(*col);
  }
  return used;
}

std::string edge_name(EdgeId e) { return "edge " + std::to_string(e.value); }

std::size_t union_size(const Multigraph& g, const std::vector<EdgeId>& cycle, const WorkingLists& lists,
                       std::optional<std::pair<EdgeId, Color>> hypothetical) {
  ColorSet all;
  std::vector<EdgeId> near;
  if (hypothetical) near = g.edges_within_distance(hypothetical->first, 2);
  for (EdgeId f : cycle) {
    const bool pruned = hypothetical && std::binary_search(near.begin(), near.end(), f);
    for (Color c : lists[f]) {
      if (!pruned || c != hypothetical->second) all.insert(c);
    }
  }
  return all.size();
}

}  // namespace

PendantStrip strip_pendant_edges(const Multigraph& g) {
  std::vector<std::size_t> degree(g.vertex_count());
  std::vector<bool> removed(g.edge_count(), false);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }

  PendantStrip out;
  while (!leaves.empty()) {
    const Vertex v = leaves.top();
    leaves.pop();
    if (degree[v] != 1) continue;
    for (EdgeId f : g.incident(v)) {
      if (removed[f.index()]) continue;
      removed[f.index()] = true;
      out.peel_order.push_back(f);
      const Vertex w = g.endpoints(f).other(v);
      --degree[v];
      if (--degree[w] == 1) leaves.push(w);
      break;
    }
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!removed[i]) out.core_edges.push_back(EdgeId{i});
  }
  return out;
}

void replay_peeled_edges(const Multigraph& g, std::span<const EdgeId> peel_order, const ListAssignment& lists,
                         EdgeColoring& coloring) {
  for (auto it = peel_order.rbegin(); it != peel_order.rend(); ++it) {
    const EdgeId e = *it;
    const auto pick = least_unused(lists[e], colors_near(g, e, coloring));
    if (!pick) throw InvariantFailure("no color left for peeled " + edge_name(e));
    coloring.set(e, *pick);
  }
}

WorkingLists prune_lists(const WorkingLists& lists, const EdgeColoring& newly_colored, const Multigraph& g) {
  WorkingLists out = lists;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const EdgeId e{i};
    if (newly_colored.has(e)) continue;
    for (Color c : colors_near(g, e, newly_colored)) out[e].erase(c);
  }
  return out;
}

EdgeColoring greedy_color_matching(std::span<const EdgeId> leftover_matching, const WorkingLists& lists,
                                   const Multigraph& g) {
  std::vector<EdgeId> order(leftover_matching.begin(), leftover_matching.end());
  std::sort(order.begin(), order.end());
  std::vector<bool> in_matching(g.edge_count(), false);
  for (EdgeId e : order) in_matching[e.index()] = true;

  EdgeColoring out(g.edge_count());
  for (EdgeId e : order) {
    ColorSet used;
    for (EdgeId f : g.edges_within_distance(e, 2)) {
      if (in_matching[f.index()] && out.has(f)) used.insert(*out.get(f));
    }
    const auto pick = least_unused(lists[e], used);
    if (!pick) throw InvariantFailure("M' " + edge_name(e) + " has no color left");
    out.set(e, *pick);
  }
  return out;
}

EdgeColoring color_connectors(const CactusDecomposition& cactus, const WorkingLists& lists, const Multigraph& g) {
  std::vector<EdgeId> order = cactus.connectors;
  std::sort(order.begin(), order.end());

  std::vector<std::size_t> five_cycles;
  std::vector<std::size_t> cycle_of_edge(g.edge_count(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < cactus.cycles.size(); ++k) {
    if (cactus.cycles[k].size() == 5) five_cycles.push_back(k);
    for (EdgeId e : cactus.cycles[k]) cycle_of_edge[e.index()] = k;
  }

  WorkingLists working = lists;
  EdgeColoring out(g.edge_count());
  for (EdgeId c : order) {
    const auto near = g.edges_within_distance(c, 2);

    // 5-cycles with an edge this connector's color would be pruned from.
    std::vector<std::size_t> guarded;
    for (EdgeId f : near) {
      const std::size_t k = cycle_of_edge[f.index()];
      if (k != static_cast<std::size_t>(-1) && cactus.cycles[k].size() == 5) guarded.push_back(k);
    }
    std::sort(guarded.begin(), guarded.end());
    guarded.erase(std::unique(guarded.begin(), guarded.end()), guarded.end());

    ColorSet used;
    for (EdgeId f : near) {
      if (auto col = out.get(f)) used.insert(*col);
    }

    std::optional<Color> pick;
    for (Color x : working[c]) {
      if (used.contains(x)) continue;
      const bool keeps_union = std::all_of(guarded.begin(), guarded.end(), [&](std::size_t k) {
        return union_size(g, cactus.cycles[k], working, std::pair{c, x}) >= 4;
      });
      if (keeps_union) {
        pick = x;
        break;
      }
    }
    if (!pick) throw InvariantFailure("connector " + std::to_string(c.value) + " has no color keeping the 5-cycle unions at 4");
    out.set(c, *pick);
    for (EdgeId f : near) {
      if (!out.has(f)) working[f].erase(*pick);
    }
  }
  return out;
}

std::vector<Color> color_cactus_cycle(std::span<const ColorSet> lists, const DiagnosticSink& diag) {
  CycleInstance inst{{lists.begin(), lists.end()}};
  if (inst.length() == 5) return color_five_cycle(inst, diag);
  const bool identical = std::all_of(inst.lists.begin(), inst.lists.end(), [&](const ColorSet& l) { return l == inst.lists.front(); });
  if (identical) return color_cycle_identical_lists(inst.length(), inst.lists.front());
  return color_cycle_lists(inst, diag);
}

EdgeColoring color_two_connected_body(const Multigraph& body, const WorkingLists& lists, const ColorerOptions& options) {
  if (lists.edge_count() != body.edge_count()) throw InputError("working lists do not match the body");

  const auto cover = petersen_cover_matching(body);
  const auto cactus = spanning_cactus(body, two_factor(body, cover), cover);

  std::vector<bool> on_cycle(body.edge_count(), false);
  for (const auto& cycle : cactus.cycles) {
    for (EdgeId e : cycle) on_cycle[e.index()] = true;
  }

  // M'.
  EdgeColoring coloring = greedy_color_matching(cactus.leftover_matching, lists, body);
  const WorkingLists after_matching = prune_lists(lists, coloring, body);
  for (std::size_t i = 0; i < body.edge_count(); ++i) {
    const EdgeId e{i};
    if (!coloring.has(e) && after_matching[e].size() < 3) {
      throw InvariantFailure("after M' pruning " + edge_name(e) + " keeps only " + std::to_string(after_matching[e].size()) + " colors");
    }
  }

  // Connectors.
  const EdgeColoring connectors = color_connectors(cactus, after_matching, body);
  for (EdgeId e : cactus.connectors) coloring.set(e, *connectors.get(e));
  const WorkingLists after_connectors = prune_lists(after_matching, connectors, body);
  for (std::size_t i = 0; i < body.edge_count(); ++i) {
    const EdgeId e{i};
    if (!coloring.has(e) && after_connectors[e].size() < 3) {
      throw InvariantFailure("after connector pruning " + edge_name(e) + " keeps only " + std::to_string(after_connectors[e].size()) + " colors");
    }
  }
  for (const auto& cycle : cactus.cycles) {
    if (cycle.size() == 5 && union_size(body, cycle, after_connectors, std::nullopt) < 4) {
      throw InvariantFailure("5-cycle through " + edge_name(cycle.front()) + " has fewer than 4 colors in its lists");
    }
  }

  // Cycles.
  for (const auto& cycle : cactus.cycles) {
    std::vector<ColorSet> cycle_lists;
    for (EdgeId e : cycle) cycle_lists.push_back(after_connectors[e]);
    const auto colors = color_cactus_cycle(cycle_lists, options.diagnostics);
    for (std::size_t k = 0; k < cycle.size(); ++k) coloring.set(cycle[k], colors[k]);
  }

  // Matching edges must be unique within distance 2.
  for (std::size_t i = 0; i < body.edge_count(); ++i) {
    const EdgeId e{i};
    if (on_cycle[i]) continue;
    for (EdgeId f : body.edges_within_distance(e, 2)) {
      if (*coloring.get(f) == *coloring.get(e)) {
        throw InvariantFailure("matching " + edge_name(e) + " shares its color with nearby " + edge_name(f));
      }
    }
  }
  if (!respects_lists(coloring, lists)) throw InvariantFailure("body coloring leaves its lists");
  if (auto bad = find_violation(body, coloring)) {
    throw InvariantFailure("body coloring has a " + std::string(to_string(bad->kind)) + " at " + edge_name(bad->witness.front()));
  }

  if (options.on_body) {
    options.on_body(BodyAudit{body, cover, cactus, lists, after_matching, after_connectors, coloring});
  }
  return coloring;
}

}  // namespace starlit
