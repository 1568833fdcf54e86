#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "starlit/types.hpp"

namespace starlit {

/// Partial or total map EdgeId -> Color over a fixed edge count.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::size_t edge_count) : colors_(edge_count) {}

  std::size_t edge_count() const { return colors_.size(); }

  std::optional<Color> get(EdgeId e) const { return colors_.at(e.index()); }
  bool has(EdgeId e) const { return colors_.at(e.index()).has_value(); }
  void set(EdgeId e, Color c) { colors_.at(e.index()) = c; }
  void clear(EdgeId e) { colors_.at(e.index()).reset(); }

  /// Grows the domain to `edge_count` edges; new edges are uncolored.
  void resize(std::size_t edge_count) { colors_.resize(edge_count); }

  bool is_total() const;
  std::size_t colored_count() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<std::optional<Color>> colors_;
};

/// Per-edge admissible colors.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::size_t edge_count) : lists_(edge_count) {}
  explicit ListAssignment(std::vector<ColorSet> lists) : lists_(std::move(lists)) {}

  /// Every one of `edge_count` edges gets {1, ..., k}.
  static ListAssignment uniform(std::size_t edge_count, Color k);

  std::size_t edge_count() const { return lists_.size(); }
  const ColorSet& operator[](EdgeId e) const { return lists_.at(e.index()); }
  ColorSet& operator[](EdgeId e) { return lists_.at(e.index()); }

  void push_back(ColorSet s) { lists_.push_back(std::move(s)); }
  std::size_t min_size() const;
  /// Largest color appearing in any list, or nullopt when all are empty.
  std::optional<Color> max_color() const;

  const std::vector<ColorSet>& lists() const { return lists_; }
  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<ColorSet> lists_;
};

}  // namespace starlit
