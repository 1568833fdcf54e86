#include "starlit/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "starlit/generators.hpp"
#include "starlit/verifier.hpp"

namespace starlit {
namespace {

// FNV-1a, 64 bit.
std::uint64_t digest(std::string_view a, std::string_view b) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::string_view part : {a, b}) {
    for (unsigned char ch : part) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

struct Outcome {
  bool verified = false;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t bodies = 0;
  double millis = 0.0;
  std::optional<FuzzFailure> failure;
  std::optional<ColoringFailure> internal;
};

Outcome run_one(const FuzzConfig& config, std::size_t index) {
  const FuzzInstance inst = make_fuzz_instance(config, index);
  Outcome out;
  out.vertices = inst.graph.vertex_count();
  out.edges = inst.graph.edge_count();

  ColorerOptions options;
  options.on_body = [&](const BodyAudit&) { ++out.bodies; };
  const auto start = std::chrono::steady_clock::now();
  try {
    const EdgeColoring c = star_edge_color_list(inst.graph, inst.lists, options);
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!respects_lists(c, inst.lists)) {
      out.failure = FuzzFailure{index, "coloring leaves the lists", std::nullopt};
    } else if (auto bad = find_violation(inst.graph, c)) {
      out.failure = FuzzFailure{index, std::string("coloring has a ") + std::string(to_string(bad->kind)), std::nullopt};
    } else {
      out.verified = true;
    }
  } catch (const ColoringFailure& err) {
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.failure = FuzzFailure{index, err.what(), std::nullopt};
    out.internal = err;
  } catch (const std::exception& err) {
    out.failure = FuzzFailure{index, err.what(), std::nullopt};
  }
  return out;
}

}  // namespace

void validate(const FuzzConfig& config) {
  if (config.palette_size < 7) {
    throw InputError("palette size " + std::to_string(config.palette_size) + " is below 7; lists of size 7 are impossible");
  }
  const std::size_t least = config.allow_parallel ? 2 : 4;
  if (config.max_vertices < least) {
    throw InputError("max vertices must be at least " + std::to_string(least));
  }
}

FuzzInstance make_fuzz_instance(const FuzzConfig& config, std::size_t index) {
  validate(config);
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);

  const std::size_t least = config.allow_parallel ? 2 : 4;
  const std::size_t top = config.max_vertices - config.max_vertices % 2;
  std::uniform_int_distribution<std::size_t> half(least / 2, top / 2);
  const std::size_t n = 2 * half(rng);

  // A quarter of the instances stay cubic; the rest lose edges.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double delete_prob = unit(rng) < 0.25 ? 0.0 : 0.5 * unit(rng);

  FuzzInstance inst{random_subcubic(n, rng, delete_prob, config.allow_parallel), {}};
  inst.lists = random_lists(inst.graph.edge_count(), 7, config.palette_size, rng);
  return inst;
}

double FuzzReport::percentile_millis(double q) const {
  if (millis.empty()) return 0.0;
  std::vector<double> sorted = millis;
  std::sort(sorted.begin(), sorted.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

FuzzReport run_fuzz(const FuzzConfig& config, const std::optional<std::filesystem::path>& diag_dir) {
  validate(config);
  std::vector<Outcome> outcomes(config.instance_count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= outcomes.size()) return;
      outcomes[i] = run_one(config, i);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::min(threads, outcomes.size()); ++t) pool.emplace_back(worker);
  pool.clear();

  FuzzReport report;
  report.instances = outcomes.size();
  for (auto& o : outcomes) {
    report.verified += o.verified;
    report.total_vertices += o.vertices;
    report.total_edges += o.edges;
    report.bodies += o.bodies;
    report.millis.push_back(o.millis);
    if (!o.failure) continue;
    if (o.internal && diag_dir) o.failure->bundle = write_diagnostics_bundle(*o.internal, *diag_dir);
    report.failures.push_back(std::move(*o.failure));
  }
  return report;
}

void print_report(std::ostream& out, const FuzzConfig& config, const FuzzReport& report, bool with_timings) {
  out << "fuzz seed=" << config.seed << " count=" << config.instance_count << " max_n=" << config.max_vertices
      << " palette=" << config.palette_size << " parallel=" << (config.allow_parallel ? "yes" : "no") << '\n';
  out << "instances " << report.instances << '\n';
  out << "verified " << report.verified << '/' << report.instances << '\n';
  out << "vertices " << report.total_vertices << " edges " << report.total_edges << " bodies " << report.bodies << '\n';
  for (const auto& f : report.failures) {
    out << "FAIL instance " << f.index << ": " << f.reason;
    if (f.bundle) out << " (bundle " << f.bundle->string() << ')';
    out << '\n';
  }
  if (with_timings) {
    out << std::fixed << std::setprecision(3) << "time_ms p50 " << report.percentile_millis(0.5) << " p90 "
        << report.percentile_millis(0.9) << " p99 " << report.percentile_millis(0.99) << " max "
        << report.percentile_millis(1.0) << '\n';
  }
  out << (report.failures.empty() ? "result PASS" : "result FAIL") << '\n';
}

std::filesystem::path write_diagnostics_bundle(const ColoringFailure& failure, const std::filesystem::path& root) {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << digest(failure.graph_text(), failure.lists_text());
  const auto dir = root / name.str();
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "graph.txt") << failure.graph_text();
  std::ofstream(dir / "lists.txt") << failure.lists_text();
  std::ofstream log(dir / "trace.log");
  log << "error: " << failure.what() << '\n';
  for (const auto& line : failure.trace()) log << line << '\n';
  return dir;
}

std::filesystem::path default_diagnostics_dir() {
  if (const char* env = std::getenv("STARLIT_DIAG_DIR"); env && *env) return env;
  return std::filesystem::current_path() / "starlit-diagnostics";
}

}  // namespace starlit
