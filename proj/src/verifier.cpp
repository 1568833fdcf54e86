#include "starlit/verifier.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace starlit {
namespace {

using EdgeSeq = std::array<EdgeId, 4>;

EdgeSeq canonical_path(EdgeSeq s) {
  EdgeSeq r{s[3], s[2], s[1], s[0]};
  return std::min(s, r);
}

EdgeSeq canonical_cycle(const EdgeSeq& s) {
  EdgeSeq best = s;
  for (int rot = 0; rot < 4; ++rot) {
    EdgeSeq fwd{}, bwd{};
    for (int i = 0; i < 4; ++i) {
      fwd[i] = s[(rot + i) % 4];
      bwd[i] = s[(rot - i + 4) % 4];
    }
    best = std::min({best, fwd, bwd});
  }
  return best;
}

// Tracks the least witness seen so far.
struct Best {
  std::optional<Violation> found;

  void offer(ViolationKind kind, std::vector<EdgeId> witness) {
    if (!found || witness < found->witness) found = Violation{kind, std::move(witness)};
  }
};

// Enumerates every walk of four colored edges starting with `first` (in both
// orientations) and records the bichromatic simple paths and 4-cycles.
// When `must_contain` is set, walks not using it are skipped.
void scan_walks_from(const Multigraph& g, const EdgeColoring& c, EdgeId first, std::optional<EdgeId> must_contain,
                     Best& best) {
  std::array<EdgeId, 4> edges{};
  std::array<Vertex, 5> verts{};

  auto finish = [&] {
    if (must_contain && std::find(edges.begin(), edges.end(), *must_contain) == edges.end()) return;
    std::array<Color, 4> col{};
    for (int i = 0; i < 4; ++i) col[i] = *c.get(edges[i]);
    std::array<Color, 4> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) - sorted.begin() > 2) return;

    const bool closed = verts[4] == verts[0];
    const std::size_t distinct_needed = closed ? 4 : 5;
    std::array<Vertex, 5> vs = verts;
    std::sort(vs.begin(), vs.begin() + distinct_needed);
    if (std::adjacent_find(vs.begin(), vs.begin() + distinct_needed) != vs.begin() + distinct_needed) return;

    if (closed) {
      auto w = canonical_cycle(edges);
      best.offer(ViolationKind::bichromatic_cycle, {w.begin(), w.end()});
    } else {
      auto w = canonical_path(edges);
      best.offer(ViolationKind::bichromatic_path, {w.begin(), w.end()});
    }
  };

  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == 4) {
      finish();
      return;
    }
    const Vertex at = verts[depth];
    for (EdgeId f : g.incident(at)) {
      if (f == edges[depth - 1] || !c.has(f)) continue;
      edges[depth] = f;
      verts[depth + 1] = g.endpoints(f).other(at);
      self(self, depth + 1);
    }
  };

  if (!c.has(first)) return;
  const auto& ends = g.endpoints(first);
  for (auto [a, b] : {std::pair{ends.u, ends.v}, std::pair{ends.v, ends.u}}) {
    edges[0] = first;
    verts[0] = a;
    verts[1] = b;
    extend(extend, 1);
  }
}

std::optional<Violation> least_improper(const Multigraph& g, const EdgeColoring& c, std::optional<EdgeId> only) {
  std::optional<Violation> best;
  auto consider = [&](EdgeId a, EdgeId b) {
    if (a == b || !c.has(a) || !c.has(b) || *c.get(a) != *c.get(b)) return;
    std::vector<EdgeId> w{std::min(a, b), std::max(a, b)};
    if (!best || w < best->witness) best = Violation{ViolationKind::improper, std::move(w)};
  };
  if (only) {
    for (EdgeId f : g.edges_within_distance(*only, 1)) consider(*only, f);
    return best;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) consider(inc[i], inc[j]);
  }
  return best;
}

void check_domain(const Multigraph& g, const EdgeColoring& c) {
  if (c.edge_count() != g.edge_count()) {
    throw InputError("coloring covers " + std::to_string(c.edge_count()) + " edges but the graph has " +
                     std::to_string(g.edge_count()));
  }
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::improper: return "improper";
    case ViolationKind::bichromatic_path: return "bichromatic_path";
    case ViolationKind::bichromatic_cycle: return "bichromatic_cycle";
  }
  return "unknown";
}

std::optional<Violation> find_violation(const Multigraph& g, const EdgeColoring& c) {
  check_domain(g, c);
  if (!c.is_total()) throw InputError("find_violation needs a total coloring; use find_violation_partial");
  return find_violation_partial(g, c);
}

std::optional<Violation> find_violation_partial(const Multigraph& g, const EdgeColoring& c) {
  check_domain(g, c);
  if (auto v = least_improper(g, c, std::nullopt)) return v;
  Best best;
  for (std::size_t i = 0; i < g.edge_count(); ++i) scan_walks_from(g, c, EdgeId{i}, std::nullopt, best);
  return best.found;
}

std::optional<Violation> find_violation_involving(const Multigraph& g, const EdgeColoring& c, EdgeId e) {
  check_domain(g, c);
  if (!c.has(e)) return std::nullopt;
  if (auto v = least_improper(g, c, e)) return v;

  // A 4-edge walk through e starts at most three steps away from it.
  std::vector<EdgeId> starts = g.edges_within_distance(e, 2);
  const std::size_t ring2 = starts.size();
  for (std::size_t i = 0; i < ring2; ++i) {
    for (EdgeId f : g.edges_within_distance(starts[i], 1)) starts.push_back(f);
  }
  starts.push_back(e);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  Best best;
  for (EdgeId s : starts) scan_walks_from(g, c, s, e, best);
  return best.found;
}

bool respects_lists(const EdgeColoring& c, const ListAssignment& lists) {
  for (std::size_t i = 0; i < c.edge_count(); ++i) {
    const EdgeId e{i};
    if (!c.has(e)) continue;
    if (i >= lists.edge_count()) throw InputError("edge " + std::to_string(i) + " is colored but has no list");
    if (!lists[e].contains(*c.get(e))) return false;
  }
  return true;
}

}  // namespace starlit
