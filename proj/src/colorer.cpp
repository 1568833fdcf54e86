#include "starlit/colorer.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>
#include <string>

#include "starlit/io.hpp"
#include "starlit/verifier.hpp"

namespace starlit {

ColoringFailure::ColoringFailure(const std::string& what, std::string graph_text, std::string lists_text,
                                 std::vector<std::string> trace)
    : InvariantFailure(what), graph_text_(std::move(graph_text)), lists_text_(std::move(lists_text)), trace_(std::move(trace)) {
  std::string bundle = "## graph\n" + graph_text_ + "## lists\n" + lists_text_ + "## trace\n";
  for (const auto& line : trace_) bundle += line + '\n';
  set_bundle(std::move(bundle));
}

namespace {

constexpr std::size_t kListSize = 7;

struct Context {
  const ColorerOptions& options;
  Color next_fresh;
  std::vector<std::string> trace;

  ColorSet fresh_list() {
    if (next_fresh > std::numeric_limits<Color>::max() - kListSize) throw InputError("color values too large to extend the palette");
    ColorSet s;
    for (std::size_t i = 0; i < kListSize; ++i) s.insert(next_fresh++);
    return s;
  }

  void log(std::string line) { trace.push_back(std::move(line)); }
};

ListAssignment restrict_lists(const ListAssignment& lists, std::span<const EdgeId> edges) {
  ListAssignment out;
  for (EdgeId e : edges) out.push_back(lists[e]);
  return out;
}

// Edge sets of the connected components spanned by `edges`, ordered by least
// edge id.
std::vector<std::vector<EdgeId>> edge_components(const Multigraph& g, std::span<const EdgeId> edges) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : edges) parent[find(g.endpoints(e).u)] = find(g.endpoints(e).v);

  std::vector<std::vector<EdgeId>> comps;
  std::vector<std::size_t> slot(g.vertex_count(), static_cast<std::size_t>(-1));
  for (EdgeId e : edges) {
    const std::size_t root = find(g.endpoints(e).u);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = comps.size();
      comps.emplace_back();
    }
    comps[slot[root]].push_back(e);
  }
  return comps;
}

bool is_two_regular(const Multigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

// One frame of the explicit recursion. `advance` runs until the frame either
// needs a subproblem colored (returned; its coloring is passed to the next
// call) or finishes (returns nullptr with `result` filled).
class Task {
 public:
  virtual ~Task() = default;
  virtual std::unique_ptr<Task> advance(Context& ctx, EdgeColoring* child) = 0;
  EdgeColoring result;
};

// Colors an arbitrary subcubic graph whose surroundings impose no constraint.
class SolveTask : public Task {
 public:
  SolveTask(Multigraph g, ListAssignment lists) : g_(std::move(g)), lists_(std::move(lists)) {}
  std::unique_ptr<Task> advance(Context& ctx, EdgeColoring* child) override;

 private:
  Multigraph g_;
  ListAssignment lists_;
  PendantStrip strip_;
  std::vector<std::vector<EdgeId>> components_;
  std::size_t next_component_ = 0;
  Subgraph pending_;  // component waiting on its supergraph coloring
  bool started_ = false;
};

// Colors a supergraph: bridgeless ones directly, otherwise by splitting off a
// pendant block and coloring the rest first.
class BlocksTask : public Task {
 public:
  BlocksTask(Multigraph h, ListAssignment lists) : h_(std::move(h)), lists_(std::move(lists)) {}
  std::unique_ptr<Task> advance(Context& ctx, EdgeColoring* child) override;

 private:
  Multigraph h_;
  ListAssignment lists_;
  std::vector<EdgeId> block_;
  EdgeId bridge_;
  Subgraph rest_;
};

std::unique_ptr<Task> SolveTask::advance(Context& ctx, EdgeColoring* child) {
  if (!started_) {
    started_ = true;
    result = EdgeColoring(g_.edge_count());
    strip_ = strip_pendant_edges(g_);
    components_ = edge_components(g_, strip_.core_edges);
    ctx.log("solve n=" + std::to_string(g_.vertex_count()) + " m=" + std::to_string(g_.edge_count()) +
            " peeled=" + std::to_string(strip_.peel_order.size()) + " components=" + std::to_string(components_.size()));
  }

  if (child) {
    // Only the component's own edges come back; added supergraph edges are
    // dropped here.
    for (std::size_t i = 0; i < pending_.parent_edge.size(); ++i) result.set(pending_.parent_edge[i], *child->get(EdgeId{i}));
  }

  while (next_component_ < components_.size()) {
    const auto& comp = components_[next_component_++];
    Subgraph sub = edge_induced_subgraph(g_, comp);
    ListAssignment sub_lists = restrict_lists(lists_, sub.parent_edge);

    if (is_two_regular(sub.graph)) {
      const auto cycle = two_factor(sub.graph, {}).front();
      std::vector<ColorSet> cycle_lists;
      for (EdgeId e : cycle) cycle_lists.push_back(sub_lists[e]);
      ctx.log("bare cycle of length " + std::to_string(cycle.size()));
      const auto colors = color_cactus_cycle(cycle_lists, ctx.options.diagnostics);
      for (std::size_t k = 0; k < cycle.size(); ++k) result.set(sub.parent_edge[cycle[k].index()], colors[k]);
      continue;
    }

    SupergraphResult sup = build_supergraph(sub.graph);
    for (std::size_t k = 0; k < sup.added_edges.size(); ++k) sub_lists.push_back(ctx.fresh_list());
    ctx.log("supergraph n=" + std::to_string(sup.graph.vertex_count()) + " added=" + std::to_string(sup.added_edges.size()));
    pending_ = std::move(sub);
    return std::make_unique<BlocksTask>(std::move(sup.graph), std::move(sub_lists));
  }

  replay_peeled_edges(g_, strip_.peel_order, lists_, result);
  return nullptr;
}

std::unique_ptr<Task> BlocksTask::advance(Context& ctx, EdgeColoring* child) {
  if (!child) {
    const BlockStructure blocks = block_decomposition(h_);
    if (blocks.bridges.empty()) {
      ctx.log("body n=" + std::to_string(h_.vertex_count()) + " m=" + std::to_string(h_.edge_count()));
      result = color_two_connected_body(h_, lists_, ctx.options);
      return nullptr;
    }

    // A leaf of the block-cut tree whose vertices all have degree 3. Its cut
    // vertex has two edges inside and one bridge leaving it.
    std::optional<std::size_t> leaf;
    for (std::size_t b = 0; b < blocks.blocks.size() && !leaf; ++b) {
      if (blocks.blocks[b].size() < 2 || blocks.block_cut_vertices[b].size() != 1) continue;
      bool all_cubic = true;
      for (EdgeId e : blocks.blocks[b]) {
        all_cubic = all_cubic && h_.degree(h_.endpoints(e).u) == 3 && h_.degree(h_.endpoints(e).v) == 3;
      }
      if (all_cubic) leaf = b;
    }
    if (!leaf) throw InvariantFailure("bridged supergraph has no pendant block with all vertices of degree 3");

    block_ = blocks.blocks[*leaf];
    const Vertex cut = blocks.block_cut_vertices[*leaf].front();
    std::optional<EdgeId> bridge;
    for (EdgeId f : h_.incident(cut)) {
      if (!std::binary_search(block_.begin(), block_.end(), f)) bridge = f;
    }
    if (!bridge || !std::binary_search(blocks.bridges.begin(), blocks.bridges.end(), *bridge)) {
      throw InvariantFailure("pendant block at vertex " + std::to_string(cut) + " is not attached by a bridge");
    }
    bridge_ = *bridge;

    std::vector<EdgeId> rest;
    for (std::size_t i = 0; i < h_.edge_count(); ++i) {
      const EdgeId e{i};
      if (e != bridge_ && !std::binary_search(block_.begin(), block_.end(), e)) rest.push_back(e);
    }
    ctx.log("pendant block of " + std::to_string(block_.size()) + " edges at bridge " + std::to_string(bridge_.value) +
            ", rest has " + std::to_string(rest.size()) + " edges");
    rest_ = edge_induced_subgraph(h_, rest);
    return std::make_unique<SolveTask>(rest_.graph, restrict_lists(lists_, rest_.parent_edge));
  }

  result = EdgeColoring(h_.edge_count());
  for (std::size_t i = 0; i < rest_.parent_edge.size(); ++i) result.set(rest_.parent_edge[i], *child->get(EdgeId{i}));

  // Bridge: a color absent from the (at most six) colored edges within
  // distance 2.
  ColorSet used;
  const auto near_bridge = h_.edges_within_distance(bridge_, 2);
  for (EdgeId f : near_bridge) {
    if (auto c = result.get(f)) used.insert(*c);
  }
  std::optional<Color> pick;
  for (Color c : lists_[bridge_]) {
    if (!used.contains(c)) {
      pick = c;
      break;
    }
  }
  if (!pick) throw InvariantFailure("bridge " + std::to_string(bridge_.value) + " has no free color");
  result.set(bridge_, *pick);

  // Block: lists lose the bridge color within distance 2 of the bridge.
  Subgraph block = edge_induced_subgraph(h_, block_);
  WorkingLists working = restrict_lists(lists_, block.parent_edge);
  for (std::size_t i = 0; i < block.parent_edge.size(); ++i) {
    if (std::binary_search(near_bridge.begin(), near_bridge.end(), block.parent_edge[i])) working[EdgeId{i}].erase(*pick);
  }
  ctx.log("body n=" + std::to_string(block.graph.vertex_count()) + " m=" + std::to_string(block.graph.edge_count()) +
          " (pendant)");
  const EdgeColoring inner = color_two_connected_body(block.graph, working, ctx.options);
  for (std::size_t i = 0; i < block.parent_edge.size(); ++i) result.set(block.parent_edge[i], *inner.get(EdgeId{i}));
  return nullptr;
}

}  // namespace

EdgeColoring star_edge_color_list(const Multigraph& g, const ListAssignment& lists, const ColorerOptions& options) {
  if (!g.is_subcubic()) throw InputError("graph is not subcubic (maximum degree " + std::to_string(g.max_degree()) + ")");
  if (lists.edge_count() != g.edge_count()) {
    throw InputError("list assignment covers " + std::to_string(lists.edge_count()) + " edges, graph has " +
                     std::to_string(g.edge_count()));
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (lists[EdgeId{i}].size() < kListSize) {
      throw InputError("edge " + std::to_string(i) + " has a list of size " + std::to_string(lists[EdgeId{i}].size()) +
                       ", need at least 7");
    }
  }

  const auto max_color = lists.max_color();
  if (max_color && *max_color == std::numeric_limits<Color>::max()) throw InputError("color values too large");
  Context ctx{options, max_color ? *max_color + 1 : 1, {}};

  try {
    std::vector<std::unique_ptr<Task>> stack;
    stack.push_back(std::make_unique<SolveTask>(g, lists));
    std::optional<EdgeColoring> finished;
    while (!stack.empty()) {
      auto next = stack.back()->advance(ctx, finished ? &*finished : nullptr);
      finished.reset();
      if (next) {
        stack.push_back(std::move(next));
      } else {
        finished = std::move(stack.back()->result);
        stack.pop_back();
      }
    }

    EdgeColoring out = std::move(*finished);
    if (!out.is_total()) throw InvariantFailure("coloring is not total");
    if (!respects_lists(out, lists)) throw InvariantFailure("coloring leaves the lists");
    if (auto bad = find_violation(g, out)) {
      throw InvariantFailure("final coloring has a " + std::string(to_string(bad->kind)));
    }
    return out;
  } catch (const ColoringFailure&) {
    throw;
  } catch (const std::logic_error& err) {
    // InvariantFailure, or an InputError raised by an internal stage whose
    // preconditions the driver was supposed to establish.
    throw ColoringFailure(err.what(), format_graph(g), format_lists(lists), std::move(ctx.trace));
  }
}

}  // namespace starlit
