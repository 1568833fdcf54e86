#include "starlit/cycles.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "starlit/verifier.hpp"

namespace starlit {
namespace {

// Forbidden pattern on four consecutive edges of a properly colored cycle.
bool alternating(Color a, Color b, Color c, Color d) { return a == c && b == d; }

void require_lists(const CycleInstance& inst, std::size_t min_size) {
  for (std::size_t i = 0; i < inst.length(); ++i) {
    if (inst.lists[i].size() < min_size) {
      throw InputError("cycle edge " + std::to_string(i) + " has a list of size " + std::to_string(inst.lists[i].size()) +
                       ", need " + std::to_string(min_size));
    }
  }
}

std::optional<Color> least_excluding(const ColorSet& list, std::initializer_list<std::optional<Color>> banned) {
  for (Color c : list) {
    if (std::none_of(banned.begin(), banned.end(), [c](const auto& b) { return b && *b == c; })) return c;
  }
  return std::nullopt;
}

// Relabelling of the cycle as e_1..e_n (stored 0-based in `order`) with
// L(e_1) \ L(e_n) nonempty; nullopt when all adjacent lists are equal.
std::optional<std::vector<std::size_t>> orient(const CycleInstance& inst) {
  const std::size_t n = inst.length();
  auto has_extra = [](const ColorSet& a, const ColorSet& b) {
    return std::any_of(a.begin(), a.end(), [&](Color c) { return !b.contains(c); });
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    std::vector<std::size_t> order(n);
    if (has_extra(inst.lists[j], inst.lists[i])) {
      // e_1 = j, walking forward, so e_n = i.
      for (std::size_t k = 0; k < n; ++k) order[k] = (j + k) % n;
      return order;
    }
    if (has_extra(inst.lists[i], inst.lists[j])) {
      // e_1 = i, walking backward, so e_n = j.
      for (std::size_t k = 0; k < n; ++k) order[k] = (i + n - k) % n;
      return order;
    }
  }
  return std::nullopt;
}

// The constructive procedure on relabelled lists. `at(k)` is the list of e_k
// for k = 1..n. Returns nullopt if some choice runs out of colors.
std::optional<std::vector<Color>> chain_procedure(const std::vector<const ColorSet*>& at) {
  const std::size_t n = at.size();
  std::vector<std::optional<Color>> s(n + 1);
  auto L = [&](std::size_t k) -> const ColorSet& { return *at[k - 1]; };

  for (Color c : L(1)) {
    if (!L(n).contains(c)) {
      s[1] = c;
      break;
    }
  }
  if (!s[1]) return std::nullopt;

  if (n % 2 == 0) {
    for (std::size_t i = 1; i <= (n - 2) / 2; ++i) {
      const std::size_t k = 2 * i + 1;
      s[k] = k == n - 1 ? least_excluding(L(k), {s[k - 2], s[1]}) : least_excluding(L(k), {s[k - 2]});
      if (!s[k]) return std::nullopt;
    }
    for (std::size_t i = 1; i <= n / 2; ++i) {
      const std::size_t k = 2 * i;
      s[k] = least_excluding(L(k), {s[k - 1], s[k == n ? 1 : k + 1]});
      if (!s[k]) return std::nullopt;
    }
  } else {
    for (std::size_t i = 1; i <= (n - 3) / 2; ++i) {
      const std::size_t k = 2 * i + 1;
      s[k] = least_excluding(L(k), {s[k - 2]});
      if (!s[k]) return std::nullopt;
    }
    s[2] = least_excluding(L(2), {s[1], s[3]});
    s[n] = least_excluding(L(n), {s[n - 2], s[2]});
    if (!s[2] || !s[n]) return std::nullopt;
    for (std::size_t i = 2; i <= (n - 1) / 2; ++i) {
      const std::size_t k = 2 * i;
      s[k] = least_excluding(L(k), {s[k - 1], s[k + 1]});
      if (!s[k]) return std::nullopt;
    }
  }

  std::vector<Color> out(n);
  for (std::size_t k = 1; k <= n; ++k) out[k - 1] = *s[k];
  return out;
}

bool respects(const CycleInstance& inst, const std::vector<Color>& colors) {
  if (colors.size() != inst.length()) return false;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (!inst.lists[i].contains(colors[i])) return false;
  }
  return true;
}

// Runs the oriented procedure, self-checks, and falls back to the exact search.
std::vector<Color> run_procedure(const CycleInstance& inst, const char* name, const DiagnosticSink& diag) {
  const std::size_t n = inst.length();
  const auto order = orient(inst);
  if (!order) throw InputError(std::string(name) + ": all adjacent lists are equal");

  std::vector<const ColorSet*> relabelled(n);
  for (std::size_t k = 0; k < n; ++k) relabelled[k] = &inst.lists[(*order)[k]];

  std::optional<std::vector<Color>> colors;
  if (auto chained = chain_procedure(relabelled)) {
    colors = std::vector<Color>(n);
    for (std::size_t k = 0; k < n; ++k) (*colors)[(*order)[k]] = (*chained)[k];
  }
  if (colors && respects(inst, *colors) && is_star_cycle_coloring(*colors)) return *colors;

  if (diag) {
    diag(std::string(name) + ": constructive procedure failed its self-check on a cycle of length " +
         std::to_string(n) + "; using exact search");
  }
  if (auto exact = dp_cycle_color(inst)) return *exact;
  throw InvariantFailure(std::string(name) + ": no star coloring exists for a cycle of length " + std::to_string(n));
}

}  // namespace

Multigraph cycle_graph(std::size_t n) {
  Multigraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return g;
}

bool is_star_cycle_coloring(std::span<const Color> colors) {
  if (colors.size() < 2) return false;
  const Multigraph g = cycle_graph(colors.size());
  EdgeColoring c(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) c.set(EdgeId{i}, colors[i]);
  return !find_violation(g, c).has_value();
}

std::vector<Color> color_cycle_lists(const CycleInstance& inst, const DiagnosticSink& diag) {
  const std::size_t n = inst.length();
  if (n < 2) throw InputError("a cycle needs at least 2 edges");
  if (n == 5) throw InputError("the 5-cycle is excluded; use color_five_cycle");
  require_lists(inst, 3);
  if (!orient(inst)) throw InputError("all adjacent lists are equal; use color_cycle_identical_lists");

  if (n <= 4) {
    if (auto exact = dp_cycle_color(inst)) return *exact;
    throw InvariantFailure("no star coloring of a cycle of length " + std::to_string(n) + " from 3-lists");
  }
  return run_procedure(inst, "color_cycle_lists", diag);
}

std::vector<Color> color_cycle_identical_lists(std::size_t n, const ColorSet& palette) {
  if (n < 2) throw InputError("a cycle needs at least 2 edges");
  if (n == 5) throw InputError("the 5-cycle has no star 3-coloring");
  if (palette.size() < 3) throw InputError("palette needs at least 3 colors");

  ColorSet three;
  for (Color c : palette) {
    if (three.size() == 3) break;
    three.insert(c);
  }
  const std::vector<Color> abc(three.begin(), three.end());
  if (n % 3 == 0) {
    std::vector<Color> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = abc[i % 3];
    return out;
  }
  if (auto exact = dp_cycle_color(CycleInstance{std::vector<ColorSet>(n, three)})) return *exact;
  throw InvariantFailure("no star 3-coloring of C_" + std::to_string(n));
}

std::vector<Color> color_five_cycle(const CycleInstance& inst, const DiagnosticSink& diag) {
  if (inst.length() != 5) throw InputError("color_five_cycle needs a 5-cycle");
  require_lists(inst, 3);
  ColorSet all;
  for (const auto& l : inst.lists) all.insert(l.begin(), l.end());
  if (all.size() < 4) throw InputError("the lists of the 5-cycle must have at least 4 colors in total");
  if (std::all_of(inst.lists.begin(), inst.lists.end(), [&](const ColorSet& l) { return l == inst.lists[0]; })) {
    // One shared list of >= 4 colors: a b c a d.
    const std::vector<Color> p(all.begin(), std::next(all.begin(), 4));
    return {p[0], p[1], p[2], p[0], p[3]};
  }
  return run_procedure(inst, "color_five_cycle", diag);
}

std::optional<std::vector<Color>> dp_cycle_color(const CycleInstance& inst) {
  const std::size_t n = inst.length();
  if (n < 2) throw InputError("a cycle needs at least 2 edges");
  for (const auto& l : inst.lists) {
    if (l.empty()) return std::nullopt;
  }
  std::vector<std::vector<Color>> L(n);
  for (std::size_t i = 0; i < n; ++i) L[i].assign(inst.lists[i].begin(), inst.lists[i].end());

  if (n <= 3) {
    // Only properness constrains C_2 and C_3; enumerate in lexicographic order.
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<Color> colors(n);
      for (std::size_t i = 0; i < n; ++i) colors[i] = L[i][idx[i]];
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = colors[i] != colors[(i + 1) % n];
      if (ok) return colors;
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < L[pos].size()) break;
        idx[pos] = 0;
        if (pos == 0) return std::nullopt;
      }
    }
  }

  // State at position i (2 <= i < n): the colors of edges i-2, i-1, i, stored
  // as a flat index into L[i-2] x L[i-1] x L[i].
  auto state_count = [&](std::size_t i) { return L[i - 2].size() * L[i - 1].size() * L[i].size(); };
  auto encode = [&](std::size_t i, std::size_t a, std::size_t b, std::size_t c) {
    return (a * L[i - 1].size() + b) * L[i].size() + c;
  };
  std::vector<std::vector<char>> alive(n);
  for (std::size_t i = 2; i < n; ++i) alive[i].resize(state_count(i));

  for (std::size_t a0 = 0; a0 < L[0].size(); ++a0) {
    for (std::size_t a1 = 0; a1 < L[1].size(); ++a1) {
      for (std::size_t a2 = 0; a2 < L[2].size(); ++a2) {
        const Color c0 = L[0][a0], c1 = L[1][a1], c2 = L[2][a2];
        if (c0 == c1 || c1 == c2) continue;

        // Backward pass: alive[i][s] iff the suffix after position i can be
        // completed, closing the seam windows against c0, c1, c2.
        for (std::size_t ia = 0; ia < L[n - 3].size(); ++ia) {
          for (std::size_t ib = 0; ib < L[n - 2].size(); ++ib) {
            for (std::size_t ic = 0; ic < L[n - 1].size(); ++ic) {
              const Color x = L[n - 3][ia], y = L[n - 2][ib], z = L[n - 1][ic];
              alive[n - 1][encode(n - 1, ia, ib, ic)] =
                  z != c0 && !alternating(x, y, z, c0) && !alternating(y, z, c0, c1) && !alternating(z, c0, c1, c2);
            }
          }
        }
        for (std::size_t i = n - 2; i >= 2; --i) {
          for (std::size_t ia = 0; ia < L[i - 2].size(); ++ia) {
            for (std::size_t ib = 0; ib < L[i - 1].size(); ++ib) {
              for (std::size_t ic = 0; ic < L[i].size(); ++ic) {
                const Color x = L[i - 2][ia], y = L[i - 1][ib], z = L[i][ic];
                char ok = 0;
                for (std::size_t id = 0; id < L[i + 1].size() && !ok; ++id) {
                  const Color w = L[i + 1][id];
                  ok = w != z && !alternating(x, y, z, w) && alive[i + 1][encode(i + 1, ib, ic, id)];
                }
                alive[i][encode(i, ia, ib, ic)] = ok;
              }
            }
          }
        }
        if (!alive[2][encode(2, a0, a1, a2)]) continue;

        // Forward pass: least feasible color at every step.
        std::vector<std::size_t> pick{a0, a1, a2};
        for (std::size_t i = 3; i < n; ++i) {
          const std::size_t ia = pick[i - 3], ib = pick[i - 2], ic = pick[i - 1];
          const Color x = L[i - 3][ia], y = L[i - 2][ib], z = L[i - 1][ic];
          for (std::size_t id = 0; id < L[i].size(); ++id) {
            const Color w = L[i][id];
            if (w != z && !alternating(x, y, z, w) && alive[i][encode(i, ib, ic, id)]) {
              pick.push_back(id);
              break;
            }
          }
        }
        std::vector<Color> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = L[i][pick[i]];
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace starlit
