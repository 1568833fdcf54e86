#include "brute.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

namespace starlit::brute {
namespace {

// Vertex sequence of the walk e[0] e[1] e[2] e[3] starting at `start`.
std::optional<std::array<Vertex, 5>> walk(const Multigraph& g, const std::array<EdgeId, 4>& e, Vertex start) {
  std::array<Vertex, 5> v{};
  v[0] = start;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto ends = g.endpoints(e[i]);
    if (ends.u == v[i]) {
      v[i + 1] = ends.v;
    } else if (ends.v == v[i]) {
      v[i + 1] = ends.u;
    } else {
      return std::nullopt;
    }
  }
  return v;
}

bool bichromatic_tuple(const Multigraph& g, const std::vector<std::optional<Color>>& colors,
                       const std::array<EdgeId, 4>& e) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!colors[e[i].index()]) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (e[i] == e[j]) return false;
    }
  }
  auto col = [&](std::size_t i) { return *colors[e[i].index()]; };
  if (col(0) != col(2) || col(1) != col(3) || col(0) == col(1)) return false;

  for (Vertex start : {g.endpoints(e[0]).u, g.endpoints(e[0]).v}) {
    const auto v = walk(g, e, start);
    if (!v) continue;
    const std::set<Vertex> first4(v->begin(), v->begin() + 4);
    if (first4.size() != 4) continue;
    if ((*v)[4] == (*v)[0]) return true;
    if (!first4.contains((*v)[4])) return true;
  }
  return false;
}

bool share_vertex(const Multigraph& g, EdgeId a, EdgeId b) {
  const auto x = g.endpoints(a);
  const auto y = g.endpoints(b);
  return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

bool star_over(const Multigraph& g, const std::vector<std::optional<Color>>& colors) {
  const std::size_t m = g.edge_count();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (colors[a] && colors[b] && *colors[a] == *colors[b] && share_vertex(g, EdgeId{a}, EdgeId{b})) return false;
    }
  }
  std::array<EdgeId, 4> e{EdgeId{0u}, EdgeId{0u}, EdgeId{0u}, EdgeId{0u}};
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t d = 0; d < m; ++d) {
          e = {EdgeId{a}, EdgeId{b}, EdgeId{c}, EdgeId{d}};
          if (bichromatic_tuple(g, colors, e)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::optional<Color>> lift(const std::vector<Color>& colors) {
  return {colors.begin(), colors.end()};
}

// Star predicate on C_n read off its consecutive windows.
bool cycle_ok(const std::vector<Color>& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == s[(i + 1) % n]) return false;
  }
  if (n <= 3) return true;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == s[(i + 2) % n] && s[(i + 1) % n] == s[(i + 3) % n]) return false;
  }
  return true;
}

}  // namespace

bool is_star(const Multigraph& g, const std::vector<Color>& colors) { return star_over(g, lift(colors)); }

bool is_star_partial(const Multigraph& g, const std::vector<std::optional<Color>>& colors) {
  return star_over(g, colors);
}

bool is_witness(const Multigraph& g, const std::vector<Color>& colors, const std::vector<EdgeId>& witness) {
  if (witness.size() == 2) {
    return witness[0] != witness[1] && share_vertex(g, witness[0], witness[1]) &&
           colors[witness[0].index()] == colors[witness[1].index()];
  }
  if (witness.size() != 4) return false;
  return bichromatic_tuple(g, lift(colors), {witness[0], witness[1], witness[2], witness[3]});
}

std::optional<std::size_t> edge_distance(const Multigraph& g, EdgeId e, EdgeId f) {
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> dist(m, static_cast<std::size_t>(-1));
  std::deque<std::size_t> queue{e.index()};
  dist[e.index()] = 0;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t b = 0; b < m; ++b) {
      if (dist[b] == static_cast<std::size_t>(-1) && share_vertex(g, EdgeId{a}, EdgeId{b})) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  if (dist[f.index()] == static_cast<std::size_t>(-1)) return std::nullopt;
  return dist[f.index()];
}

bool is_matching(const Multigraph& g, const std::vector<EdgeId>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] == edges[j] || share_vertex(g, edges[i], edges[j])) return false;
    }
  }
  return true;
}

std::size_t max_matching_size(const Multigraph& g) {
  const std::size_t m = g.edge_count();
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<EdgeId> pick;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) pick.push_back(EdgeId{i});
    }
    if (pick.size() > best && is_matching(g, pick)) best = pick.size();
  }
  return best;
}

std::optional<std::vector<Color>> least_cycle_coloring(const std::vector<ColorSet>& lists) {
  const std::size_t n = lists.size();
  std::vector<std::vector<Color>> L;
  for (const auto& l : lists) {
    if (l.empty()) return std::nullopt;
    L.emplace_back(l.begin(), l.end());
  }
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Color> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = L[i][idx[i]];
    if (cycle_ok(s)) return s;
    std::size_t pos = n;
    while (true) {
      if (pos == 0) return std::nullopt;
      --pos;
      if (++idx[pos] < L[pos].size()) break;
      idx[pos] = 0;
    }
  }
}

bool list_colorable(const Multigraph& g, const ListAssignment& lists) {
  const std::size_t m = g.edge_count();
  std::vector<std::optional<Color>> colors(m);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) return star_over(g, colors);
    for (Color c : lists[EdgeId{i}]) {
      bool clash = false;
      for (std::size_t j = 0; j < i && !clash; ++j) {
        clash = colors[j] == c && share_vertex(g, EdgeId{i}, EdgeId{j});
      }
      if (clash) continue;
      colors[i] = c;
      if (self(self, i + 1)) return true;
    }
    colors[i].reset();
    return false;
  };
  return rec(rec, 0);
}

Multigraph random_small_subcubic(std::size_t n, std::size_t target_edges, std::mt19937_64& rng) {
  Multigraph g(n);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (int attempt = 0; attempt < 200 && g.edge_count() < target_edges; ++attempt) {
    const Vertex u = pick(rng);
    const Vertex v = pick(rng);
    if (u == v || g.degree(u) >= 3 || g.degree(v) >= 3) continue;
    g.add_edge(u, v);
  }
  return g;
}

std::vector<Color> colors_of(const EdgeColoring& c) {
  std::vector<Color> out(c.edge_count());
  for (std::size_t i = 0; i < c.edge_count(); ++i) out[i] = *c.get(EdgeId{i});
  return out;
}

EdgeColoring coloring_of(const std::vector<Color>& colors) {
  EdgeColoring c(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) c.set(EdgeId{i}, colors[i]);
  return c;
}

}  // namespace starlit::brute
