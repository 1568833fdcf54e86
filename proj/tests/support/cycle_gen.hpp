#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "starlit/cycles.hpp"

namespace starlit::testing {

inline ColorSet random_subset(std::size_t size, Color palette, std::mt19937_64& rng) {
  std::vector<Color> all(palette);
  std::iota(all.begin(), all.end(), Color{1});
  std::vector<Color> pick;
  std::sample(all.begin(), all.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(size), rng);
  return {pick.begin(), pick.end()};
}

/// 3-lists on C_n, not all equal, from palettes of 3 to 6 colors.
inline CycleInstance random_unequal_instance(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Color> palette(3, 6);
  while (true) {
    const Color p = palette(rng);
    CycleInstance inst;
    for (std::size_t i = 0; i < n; ++i) inst.lists.push_back(random_subset(3, p, rng));
    if (std::any_of(inst.lists.begin(), inst.lists.end(), [&](const ColorSet& l) { return l != inst.lists[0]; })) {
      return inst;
    }
  }
}

/// 3-lists on C_5 whose union has at least four colors.
inline CycleInstance random_five_cycle_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<Color> palette(4, 7);
  while (true) {
    const Color p = palette(rng);
    CycleInstance inst;
    ColorSet all;
    for (int i = 0; i < 5; ++i) {
      inst.lists.push_back(random_subset(3, p, rng));
      all.insert(inst.lists.back().begin(), inst.lists.back().end());
    }
    if (all.size() >= 4) return inst;
  }
}

/// Lists of random size 1..4 drawn from {1..4}.
inline CycleInstance random_small_palette_instance(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 4);
  CycleInstance inst;
  for (std::size_t i = 0; i < n; ++i) inst.lists.push_back(random_subset(size(rng), 4, rng));
  return inst;
}

inline bool respects(const CycleInstance& inst, const std::vector<Color>& colors) {
  if (colors.size() != inst.length()) return false;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (!inst.lists[i].contains(colors[i])) return false;
  }
  return true;
}

}  // namespace starlit::testing
