#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "starlit/decompose.hpp"

namespace starlit {
namespace {

constexpr int kNone = -1;

// Edmonds' blossom algorithm on a simple graph given by adjacency lists.
// One BFS per exposed root; blossoms are contracted implicitly through
// `base_`.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(std::vector<std::vector<int>> adj)
      : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())), match_(n_, kNone), parent_(n_), base_(n_),
        in_queue_(n_), in_blossom_(n_) {}

  const std::vector<int>& solve() {
    // Greedy start, each vertex taking its highest free neighbour;
    // augmentation fixes any poor choice.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (auto it = adj_[v].rbegin(); it != adj_[v].rend(); ++it) {
        const int w = *it;
        if (match_[w] == kNone) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      int v = find_augmenting_path(root);
      while (v != kNone) {
        const int pv = parent_[v];
        const int next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(in_queue_.begin(), in_queue_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    in_queue_[root] = true;
    std::deque<int> queue{root};

    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!in_queue_[i]) {
              in_queue_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          in_queue_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  std::vector<std::vector<int>> adj_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> in_queue_, in_blossom_;
};

// Least edge id per unordered vertex pair, skipping edges flagged in `skip`.
std::map<std::pair<Vertex, Vertex>, EdgeId> representatives(const Multigraph& g, const std::vector<bool>& skip) {
  std::map<std::pair<Vertex, Vertex>, EdgeId> rep;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!skip.empty() && skip[i]) continue;
    const auto& e = g.edges()[i];
    rep.try_emplace({std::min(e.u, e.v), std::max(e.u, e.v)}, EdgeId{i});
  }
  return rep;
}

std::vector<EdgeId> matching_excluding(const Multigraph& g, const std::vector<bool>& skip) {
  const auto rep = representatives(g, skip);
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const auto& [pair, id] : rep) {
    adj[pair.first].push_back(static_cast<int>(pair.second));
    adj[pair.second].push_back(static_cast<int>(pair.first));
  }
  BlossomMatcher matcher(std::move(adj));
  const auto& mate = matcher.solve();

  std::vector<EdgeId> out;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] > v) out.push_back(rep.at({static_cast<Vertex>(v), static_cast<Vertex>(mate[v])}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<EdgeId> maximum_matching(const Multigraph& g) { return matching_excluding(g, {}); }

std::vector<EdgeId> petersen_cover_matching(const Multigraph& g) {
  if (g.vertex_count() == 0) throw InputError("cover matching of an empty graph");
  if (!g.is_subcubic()) throw InputError("cover matching input must be subcubic");
  if (g.connected_components().size() != 1) throw InputError("cover matching input must be connected");
  if (!block_decomposition(g).bridges.empty()) throw InputError("cover matching input must be bridgeless");

  std::optional<Vertex> deficient;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 3) continue;
    if (g.degree(v) != 2) throw InputError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    if (deficient) throw InputError("more than one vertex of degree 2");
    deficient = v;
  }

  // The degree-2 vertex must stay exposed, so search without its edges.
  std::vector<bool> skip(g.edge_count(), false);
  if (deficient) {
    for (EdgeId f : g.incident(*deficient)) skip[f.index()] = true;
  }
  auto m = matching_excluding(g, skip);

  std::vector<bool> covered(g.vertex_count(), false);
  for (EdgeId e : m) {
    covered[g.endpoints(e).u] = true;
    covered[g.endpoints(e).v] = true;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 3 && !covered[v]) {
      throw InvariantFailure("no matching covers degree-3 vertex " + std::to_string(v) +
                             " in a bridgeless subcubic graph; matching engine bug");
    }
  }
  return m;
}

}  // namespace starlit
