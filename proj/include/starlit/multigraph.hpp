#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "starlit/types.hpp"

namespace starlit {

struct Endpoints {
  Vertex u = 0;
  Vertex v = 0;

  /// The endpoint that is not `w`. `w` must be one of the two.
  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Loopless undirected multigraph with dense vertex and edge indices.
///
/// Edges are append-only: the i-th inserted edge has id i for the lifetime of
/// the value, so every mapping keyed by EdgeId stays valid as edges are added.
/// Loops are rejected at insertion.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count);
  Multigraph(std::size_t vertex_count, std::span<const Endpoints> edges);

  /// Appends an edge and returns its id. Throws InputError on a loop or an
  /// out-of-range endpoint.
  EdgeId add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return incidence_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Endpoints& endpoints(EdgeId e) const;
  const std::vector<Endpoints>& edges() const { return edges_; }

  /// Edge ids incident to `v`, in insertion order.
  std::span<const EdgeId> incident(Vertex v) const;

  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;
  bool is_subcubic() const { return max_degree() <= 3; }

  bool valid_vertex(Vertex v) const { return v < vertex_count(); }
  bool valid_edge(EdgeId e) const { return e.index() < edge_count(); }

  bool adjacent_edges(EdgeId a, EdgeId b) const;

  /// All edges f != e at line-graph distance at most `radius` (1 or 2), in
  /// ascending id order.
  std::vector<EdgeId> edges_within_distance(EdgeId e, int radius) const;

  /// Vertex partition into connected components; each component is sorted and
  /// the components are ordered by their smallest vertex.
  std::vector<std::vector<Vertex>> connected_components() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  std::vector<Endpoints> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A subgraph induced by an edge subset, re-indexed densely, together with
/// the maps back to the parent graph.
struct Subgraph {
  Multigraph graph;
  std::vector<EdgeId> parent_edge;    // local edge -> parent edge
  std::vector<Vertex> parent_vertex;  // local vertex -> parent vertex
};

/// Builds the subgraph spanned by `edges` (vertices are exactly the endpoints
/// touched, ordered by parent index; edges keep the order given).
Subgraph edge_induced_subgraph(const Multigraph& g, std::span<const EdgeId> edges);

}  // namespace starlit
