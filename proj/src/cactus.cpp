#include <algorithm>
#include <numeric>
#include <string>

#include "starlit/decompose.hpp"

namespace starlit {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string edge_name(EdgeId e) { return "edge " + std::to_string(e.value); }

}  // namespace

std::vector<std::vector<EdgeId>> two_factor(const Multigraph& g, std::span<const EdgeId> matching) {
  std::vector<bool> removed(g.edge_count(), false);
  for (EdgeId e : matching) removed[e.index()] = true;

  std::vector<std::vector<EdgeId>> rest(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId f : g.incident(v)) {
      if (!removed[f.index()]) rest[v].push_back(f);
    }
    if (rest[v].size() != 2) {
      throw InvariantFailure("vertex " + std::to_string(v) + " has degree " + std::to_string(rest[v].size()) +
                             " after removing the matching; not a 2-factor");
    }
  }

  std::vector<bool> visited(g.vertex_count(), false);
  std::vector<std::vector<EdgeId>> cycles;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (visited[start]) continue;
    std::vector<EdgeId> cycle;
    Vertex at = start;
    EdgeId via = std::min(rest[start][0], rest[start][1]);
    visited[start] = true;
    while (true) {
      cycle.push_back(via);
      at = g.endpoints(via).other(at);
      if (at == start) break;
      if (visited[at]) throw InvariantFailure("2-factor component through vertex " + std::to_string(at) + " is not a cycle");
      visited[at] = true;
      via = rest[at][0] == via ? rest[at][1] : rest[at][0];
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

CactusDecomposition spanning_cactus(const Multigraph& g, std::vector<std::vector<EdgeId>> cycles,
                                    std::span<const EdgeId> matching) {
  constexpr std::size_t kNoCycle = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cycle_of(g.vertex_count(), kNoCycle);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (EdgeId e : cycles[c]) {
      cycle_of[g.endpoints(e).u] = c;
      cycle_of[g.endpoints(e).v] = c;
    }
  }

  std::vector<EdgeId> sorted(matching.begin(), matching.end());
  std::sort(sorted.begin(), sorted.end());

  CactusDecomposition out;
  DisjointSets sets(cycles.size());
  for (EdgeId e : sorted) {
    const auto& ends = g.endpoints(e);
    const std::size_t a = cycle_of[ends.u];
    const std::size_t b = cycle_of[ends.v];
    if (a == kNoCycle || b == kNoCycle) throw InvariantFailure(edge_name(e) + " touches a vertex outside every cycle");
    if (sets.unite(a, b)) {
      out.connectors.push_back(e);
    } else {
      out.leftover_matching.push_back(e);
    }
  }

  // Cycles in one component of g must end up in one tree.
  for (const auto& comp : g.connected_components()) {
    for (Vertex v : comp) {
      if (cycle_of[v] == kNoCycle) {
        if (g.degree(v) == 0) continue;
        throw InvariantFailure("vertex " + std::to_string(v) + " lies on no cycle");
      }
      if (sets.find(cycle_of[v]) != sets.find(cycle_of[comp.front()])) {
        throw InvariantFailure("cycle-contracted graph is disconnected; no spanning cactus");
      }
    }
  }
  out.cycles = std::move(cycles);
  return out;
}

CactusDecomposition decompose_cactus(const Multigraph& g) {
  const auto m = petersen_cover_matching(g);
  return spanning_cactus(g, two_factor(g, m), m);
}

std::optional<std::string> cactus_invariant_violation(const Multigraph& g, const CactusDecomposition& cactus) {
  const std::size_t n = g.vertex_count();
  std::vector<int> role(g.edge_count(), 0);  // 1 cycle, 2 connector, 3 leftover
  std::vector<int> cycle_hits(n, 0);

  for (const auto& cycle : cactus.cycles) {
    if (cycle.empty()) return "empty cycle";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const EdgeId e = cycle[i];
      const EdgeId next = cycle[(i + 1) % cycle.size()];
      if (!g.valid_edge(e)) return edge_name(e) + " is not an edge";
      if (role[e.index()] != 0) return edge_name(e) + " used twice";
      role[e.index()] = 1;
      if (cycle.size() > 1 && !g.adjacent_edges(e, next)) return "cycle edges " + std::to_string(e.value) + " and " + std::to_string(next.value) + " are not consecutive";
    }
    std::vector<Vertex> verts;
    for (EdgeId e : cycle) {
      verts.push_back(g.endpoints(e).u);
      verts.push_back(g.endpoints(e).v);
    }
    std::sort(verts.begin(), verts.end());
    // Each vertex of a cycle is an endpoint of exactly two of its edges.
    for (std::size_t i = 0; i < verts.size(); i += 2) {
      if (i + 1 >= verts.size() || verts[i] != verts[i + 1] || (i + 2 < verts.size() && verts[i + 2] == verts[i])) {
        return "cycle through vertex " + std::to_string(verts[i]) + " is not a simple cycle";
      }
      ++cycle_hits[verts[i]];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 0 && cycle_hits[v] != 1) {
      return "vertex " + std::to_string(v) + " lies on " + std::to_string(cycle_hits[v]) + " cycles";
    }
  }

  std::vector<int> matched(n, 0);
  auto take = [&](const std::vector<EdgeId>& edges, int tag) -> std::optional<std::string> {
    for (EdgeId e : edges) {
      if (!g.valid_edge(e)) return edge_name(e) + " is not an edge";
      if (role[e.index()] != 0) return edge_name(e) + " used twice";
      role[e.index()] = tag;
      if (++matched[g.endpoints(e).u] > 1 || ++matched[g.endpoints(e).v] > 1) {
        return "connectors and M' do not form a matching at " + edge_name(e);
      }
    }
    return std::nullopt;
  };
  if (auto bad = take(cactus.connectors, 2)) return bad;
  if (auto bad = take(cactus.leftover_matching, 3)) return bad;
  for (std::size_t i = 0; i < role.size(); ++i) {
    if (role[i] == 0) return edge_name(EdgeId{i}) + " is not covered by the decomposition";
  }

  // Cycles plus connectors connect each component: the connectors must form a
  // spanning tree on the contracted cycles.
  std::vector<std::size_t> cycle_of(n, 0);
  for (std::size_t c = 0; c < cactus.cycles.size(); ++c) {
    for (EdgeId e : cactus.cycles[c]) cycle_of[g.endpoints(e).u] = cycle_of[g.endpoints(e).v] = c;
  }
  DisjointSets sets(cactus.cycles.size());
  for (EdgeId e : cactus.connectors) {
    if (!sets.unite(cycle_of[g.endpoints(e).u], cycle_of[g.endpoints(e).v])) {
      return "connector " + std::to_string(e.value) + " closes a cycle in the cactus tree";
    }
  }
  for (const auto& comp : g.connected_components()) {
    for (Vertex v : comp) {
      if (g.degree(v) > 0 && sets.find(cycle_of[v]) != sets.find(cycle_of[comp.front()])) {
        return "cactus is disconnected at vertex " + std::to_string(v);
      }
    }
  }

  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    std::size_t near = 0;
    for (EdgeId f : g.edges_within_distance(EdgeId{i}, 2)) near += role[f.index()] == 3;
    if (near > 4) return edge_name(EdgeId{i}) + " has " + std::to_string(near) + " M' edges within distance 2";
  }
  return std::nullopt;
}

}  // namespace starlit
