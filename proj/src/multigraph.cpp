#include "starlit/multigraph.hpp"

#include <algorithm>
#include <string>

namespace starlit {

Multigraph::Multigraph(std::size_t vertex_count) : incidence_(vertex_count) {}

Multigraph::Multigraph(std::size_t vertex_count, std::span<const Endpoints> edges) : incidence_(vertex_count) {
  edges_.reserve(edges.size());
  for (const auto& e : edges) add_edge(e.u, e.v);
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v) {
  if (!valid_vertex(u) || !valid_vertex(v)) {
    throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v) + " (n = " +
                     std::to_string(vertex_count()) + ")");
  }
  if (u == v) throw InputError("loops are not allowed (vertex " + std::to_string(u) + ")");
  const EdgeId id{edges_.size()};
  edges_.push_back({u, v});
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  return id;
}

const Endpoints& Multigraph::endpoints(EdgeId e) const {
  if (!valid_edge(e)) throw InputError("edge id out of range: " + std::to_string(e.value));
  return edges_[e.index()];
}

std::span<const EdgeId> Multigraph::incident(Vertex v) const {
  if (!valid_vertex(v)) throw InputError("vertex out of range: " + std::to_string(v));
  return incidence_[v];
}

std::size_t Multigraph::degree(Vertex v) const { return incident(v).size(); }

std::size_t Multigraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

bool Multigraph::adjacent_edges(EdgeId a, EdgeId b) const {
  const auto& x = endpoints(a);
  const auto& y = endpoints(b);
  return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

std::vector<EdgeId> Multigraph::edges_within_distance(EdgeId e, int radius) const {
  if (!valid_edge(e)) throw InputError("edge id out of range: " + std::to_string(e.value));
  if (radius != 1 && radius != 2) throw InputError("radius must be 1 or 2");

  // Distance-1 edges share an endpoint with e; distance-2 edges share an
  // endpoint with some distance-1 edge.
  std::vector<EdgeId> near;
  const auto& ends = edges_[e.index()];
  for (Vertex w : {ends.u, ends.v}) {
    for (EdgeId f : incidence_[w]) {
      if (f != e) near.push_back(f);
    }
  }
  std::sort(near.begin(), near.end());
  near.erase(std::unique(near.begin(), near.end()), near.end());
  if (radius == 1) return near;

  std::vector<EdgeId> result = near;
  for (EdgeId f : near) {
    const auto& fe = edges_[f.index()];
    for (Vertex w : {fe.u, fe.v}) {
      for (EdgeId h : incidence_[w]) {
        if (h != e) result.push_back(h);
      }
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<std::vector<Vertex>> Multigraph::connected_components() const {
  const std::size_t n = vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (EdgeId f : incidence_[x]) {
        const Vertex y = edges_[f.index()].other(x);
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Subgraph edge_induced_subgraph(const Multigraph& g, std::span<const EdgeId> edges) {
  std::vector<Vertex> touched;
  touched.reserve(edges.size() * 2);
  for (EdgeId e : edges) {
    const auto& ends = g.endpoints(e);
    touched.push_back(ends.u);
    touched.push_back(ends.v);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(touched.begin(), touched.end(), v) - touched.begin());
  };

  Subgraph sub;
  sub.graph = Multigraph(touched.size());
  sub.parent_edge.assign(edges.begin(), edges.end());
  for (EdgeId e : edges) {
    const auto& ends = g.endpoints(e);
    sub.graph.add_edge(local(ends.u), local(ends.v));
  }
  sub.parent_vertex = std::move(touched);
  return sub;
}

}  // namespace starlit
