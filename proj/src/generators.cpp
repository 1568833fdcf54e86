#include "starlit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace starlit {

Multigraph random_cubic(std::size_t n, std::mt19937_64& rng, bool allow_parallel) {
  if (n < 2 || n % 2 != 0) throw InputError("random cubic graphs need an even vertex count >= 2");
  if (!allow_parallel && n < 4) throw InputError("simple cubic graphs need at least 4 vertices");

  std::vector<Vertex> points(3 * n);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);

  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    bool ok = true;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      const Vertex a = std::min(points[i], points[i + 1]);
      const Vertex b = std::max(points[i], points[i + 1]);
      ok = a != b && (allow_parallel || seen.insert({a, b}).second);
    }
    if (!ok) continue;
    Multigraph g(n);
    for (std::size_t i = 0; i < points.size(); i += 2) g.add_edge(points[i], points[i + 1]);
    return g;
  }
  throw InputError("pairing model did not produce an admissible cubic graph on " + std::to_string(n) + " vertices");
}

Multigraph random_subcubic(std::size_t n, std::mt19937_64& rng, double delete_prob, bool allow_parallel) {
  if (delete_prob < 0.0 || delete_prob > 1.0) throw InputError("delete probability must lie in [0, 1]");
  const std::size_t even = n % 2 == 0 ? n : n - 1;
  const Multigraph cubic = random_cubic(even, rng, allow_parallel);

  std::bernoulli_distribution drop(delete_prob);
  std::vector<Endpoints> kept;
  for (const auto& e : cubic.edges()) {
    if (!drop(rng)) kept.push_back(e);
  }
  const Multigraph thinned(cubic.vertex_count(), kept);

  // Largest component; the first one wins ties.
  const auto comps = thinned.connected_components();
  const auto& best = *std::max_element(comps.begin(), comps.end(),
                                       [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Vertex> relabel(thinned.vertex_count(), 0);
  std::vector<bool> inside(thinned.vertex_count(), false);
  for (std::size_t i = 0; i < best.size(); ++i) {
    relabel[best[i]] = static_cast<Vertex>(i);
    inside[best[i]] = true;
  }
  Multigraph out(best.size());
  for (const auto& e : thinned.edges()) {
    if (inside[e.u]) out.add_edge(relabel[e.u], relabel[e.v]);
  }
  return out;
}

ListAssignment random_lists(std::size_t edge_count, std::size_t list_size, Color palette, std::mt19937_64& rng) {
  if (palette < list_size) throw InputError("palette of " + std::to_string(palette) + " colors cannot hold lists of size " + std::to_string(list_size));
  std::vector<Color> all(palette);
  std::iota(all.begin(), all.end(), Color{1});
  ListAssignment out(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) {
    std::vector<Color> pick;
    std::sample(all.begin(), all.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(list_size), rng);
    out[EdgeId{i}] = ColorSet(pick.begin(), pick.end());
  }
  return out;
}

}  // namespace starlit
