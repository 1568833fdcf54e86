#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace starlit {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Colors admissible on one edge.
using ColorSet = std::set<Color>;

/// Positional edge identifier. Parallel edges are told apart by id only.
struct EdgeId {
  std::uint32_t value = 0;

  constexpr EdgeId() = default;
  constexpr explicit EdgeId(std::uint32_t v) : value(v) {}
  constexpr explicit EdgeId(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

/// Malformed or out-of-contract input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal stage broke a guarantee the construction relies on. Carries a
/// textual reproduction bundle when the caller supplied enough context.
class InvariantFailure : public std::logic_error {
 public:
  explicit InvariantFailure(const std::string& what, std::string bundle = {})
      : std::logic_error(what), bundle_(std::move(bundle)) {}

  const std::string& bundle() const { return bundle_; }
  void set_bundle(std::string bundle) { bundle_ = std::move(bundle); }

 private:
  std::string bundle_;
};

}  // namespace starlit

template <>
struct std::hash<starlit::EdgeId> {
  std::size_t operator()(starlit::EdgeId e) const noexcept { return std::hash<std::uint32_t>{}(e.value); }
};
