#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "starlit/colorer.hpp"
#include "starlit/coloring.hpp"
#include "starlit/multigraph.hpp"

namespace starlit {

struct FuzzConfig {
  std::size_t instance_count = 100;
  std::size_t max_vertices = 20;
  Color palette_size = 21;
  std::uint64_t seed = 0;
  bool allow_parallel = false;
};

/// Throws InputError unless palette_size >= 7 and max_vertices admits a cubic
/// seed graph (>= 2 with parallel edges, >= 4 without).
void validate(const FuzzConfig& config);

struct FuzzInstance {
  Multigraph graph;
  ListAssignment lists;
};

/// Instance `index` of the campaign; a pure function of (config, index).
FuzzInstance make_fuzz_instance(const FuzzConfig& config, std::size_t index);

struct FuzzFailure {
  std::size_t index = 0;
  std::string reason;
  std::optional<std::filesystem::path> bundle;
};

struct FuzzReport {
  std::size_t instances = 0;
  std::size_t verified = 0;
  std::size_t total_vertices = 0;
  std::size_t total_edges = 0;
  std::size_t bodies = 0;  // 2-connected bodies colored across the campaign
  std::vector<FuzzFailure> failures;
  std::vector<double> millis;  // per instance, by index

  double percentile_millis(double q) const;
};

/// Runs the campaign on a worker pool. When `diag_dir` is set, failing
/// instances leave a reproduction bundle there.
FuzzReport run_fuzz(const FuzzConfig& config, const std::optional<std::filesystem::path>& diag_dir = std::nullopt);

/// Human-readable report; `with_timings` false gives the deterministic part.
void print_report(std::ostream& out, const FuzzConfig& config, const FuzzReport& report, bool with_timings = true);

/// Writes graph.txt, lists.txt and trace.log into `root`/<digest>, where the
/// digest is taken over the graph and list texts. Returns the directory.
std::filesystem::path write_diagnostics_bundle(const ColoringFailure& failure, const std::filesystem::path& root);

/// $STARLIT_DIAG_DIR, or ./starlit-diagnostics.
std::filesystem::path default_diagnostics_dir();

}  // namespace starlit
