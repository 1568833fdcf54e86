#include "starlit/coloring.hpp"

#include <algorithm>

namespace starlit {

bool EdgeColoring::is_total() const {
  return std::all_of(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); });
}

std::size_t EdgeColoring::colored_count() const {
  return static_cast<std::size_t>(std::count_if(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); }));
}

ListAssignment ListAssignment::uniform(std::size_t edge_count, Color k) {
  ColorSet all;
  for (Color c = 1; c <= k; ++c) all.insert(c);
  return ListAssignment(std::vector<ColorSet>(edge_count, all));
}

std::size_t ListAssignment::min_size() const {
  std::size_t best = lists_.empty() ? 0 : lists_.front().size();
  for (const auto& l : lists_) best = std::min(best, l.size());
  return best;
}

std::optional<Color> ListAssignment::max_color() const {
  std::optional<Color> best;
  for (const auto& l : lists_) {
    if (!l.empty() && (!best || *l.rbegin() > *best)) best = *l.rbegin();
  }
  return best;
}

}  // namespace starlit
