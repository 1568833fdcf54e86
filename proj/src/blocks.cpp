#include <algorithm>
#include <string>

#include "starlit/decompose.hpp"

namespace starlit {

BlockStructure block_decomposition(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
  std::size_t timer = 0;

  struct Frame {
    Vertex v;
    std::optional<EdgeId> via;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> blocks;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, std::nullopt});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const Vertex v = top.v;
      const auto inc = g.incident(v);
      if (top.next < inc.size()) {
        const EdgeId f = inc[top.next++];
        if (top.via && f == *top.via) continue;  // the tree edge itself, not its parallel twins
        const Vertex w = g.endpoints(f).other(v);
        if (disc[w] == kUnseen) {
          edge_stack.push_back(f);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(f);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }

      const std::optional<EdgeId> via = top.via;
      stack.pop_back();
      if (!via) continue;
      const Vertex parent = g.endpoints(*via).other(v);
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        std::vector<EdgeId> block;
        while (true) {
          const EdgeId f = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(f);
          if (f == *via) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }

  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  BlockStructure out;
  out.block_of_edge.assign(g.edge_count(), 0);
  std::vector<std::vector<std::size_t>> blocks_at(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<Vertex> verts;
    for (EdgeId e : blocks[b]) {
      out.block_of_edge[e.index()] = b;
      verts.push_back(g.endpoints(e).u);
      verts.push_back(g.endpoints(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (Vertex v : verts) blocks_at[v].push_back(b);
    if (blocks[b].size() == 1) out.bridges.push_back(blocks[b].front());
  }
  std::sort(out.bridges.begin(), out.bridges.end());

  out.block_cut_vertices.resize(blocks.size());
  for (Vertex v = 0; v < n; ++v) {
    if (blocks_at[v].size() < 2) continue;
    out.cut_vertices.push_back(v);
    for (std::size_t b : blocks_at[v]) out.block_cut_vertices[b].push_back(v);
  }
  out.blocks = std::move(blocks);
  return out;
}

SupergraphResult build_supergraph(const Multigraph& g) {
  if (g.vertex_count() == 0) throw InputError("supergraph of an empty graph");
  if (!g.is_subcubic()) throw InputError("supergraph input must be subcubic");
  if (g.connected_components().size() != 1) throw InputError("supergraph input must be connected");

  std::vector<Vertex> deficient;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    if (d < 2) throw InputError("supergraph input has vertex " + std::to_string(v) + " of degree " + std::to_string(d));
    if (d == 2) deficient.push_back(v);
  }

  SupergraphResult out{g, {}};
  for (std::size_t i = 0; i + 1 < deficient.size(); i += 2) {
    out.added_edges.push_back(out.graph.add_edge(deficient[i], deficient[i + 1]));
  }
  return out;
}

}  // namespace starlit
