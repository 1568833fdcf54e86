#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "starlit/coloring.hpp"
#include "starlit/multigraph.hpp"

namespace starlit::testing {

inline Multigraph graph_of(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Multigraph path_graph(std::size_t edges) {
  Multigraph g(edges + 1);
  for (std::size_t i = 0; i < edges; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return g;
}

inline Multigraph ring(std::size_t n) {
  Multigraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return g;
}

inline Multigraph bundle(std::size_t copies) {
  Multigraph g(2);
  for (std::size_t i = 0; i < copies; ++i) g.add_edge(0, 1);
  return g;
}

inline EdgeColoring colored(std::initializer_list<Color> colors) {
  EdgeColoring c(colors.size());
  std::size_t i = 0;
  for (Color x : colors) c.set(EdgeId{i++}, x);
  return c;
}

inline std::vector<EdgeId> ids(std::initializer_list<std::uint32_t> values) {
  std::vector<EdgeId> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

}  // namespace starlit::testing
