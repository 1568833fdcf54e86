// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starlit/colorer.hpp"
#include "starlit/cycles.hpp"
#include "starlit/decompose.hpp"
#include "starlit/fuzz.hpp"
#include "starlit/generators.hpp"
#include "starlit/oracle.hpp"
#include "starlit/verifier.hpp"
#include "support/brute.hpp"
#include "support/cycle_gen.hpp"
#include "support/fixtures.hpp"

namespace starlit {
namespace {

constexpr std::uint64_t kSeed = 20240607;
constexpr double kFuzzBudgetSeconds = 300.0;
constexpr double kFixtureBudgetSeconds = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(const std::string& why) {
    pass = false;
    if (problems.size() < 5) problems.push_back(why);
  }
};

FuzzConfig campaign() {
  FuzzConfig config;
  config.instance_count = 1000;
  config.max_vertices = 40;
  config.palette_size = 21;
  config.seed = kSeed;
  config.allow_parallel = true;
  return config;
}

Verdict random_list_campaign() {
  Verdict v;
  const auto config = campaign();
  const auto start = Clock::now();
  const FuzzReport report = run_fuzz(config);
  const double elapsed = seconds_since(start);

  // Re-check every instance's output here rather than trusting the report.
  std::size_t rechecked = 0;
  for (std::size_t i = 0; i < config.instance_count; ++i) {
    const auto inst = make_fuzz_instance(config, i);
    try {
      const auto c = star_edge_color_list(inst.graph, inst.lists);
      if (!c.is_total() || !respects_lists(c, inst.lists) || find_violation(inst.graph, c)) {
        v.fail("instance " + std::to_string(i) + " produced an invalid coloring");
      } else {
        ++rechecked;
      }
    } catch (const std::exception& e) {
      v.fail("instance " + std::to_string(i) + ": " + e.what());
    }
  }
  for (const auto& f : report.failures) v.fail("instance " + std::to_string(f.index) + ": " + f.reason);
  if (report.verified != config.instance_count) v.fail("fuzz report verified " + std::to_string(report.verified));
  if (elapsed > kFuzzBudgetSeconds) v.fail("campaign took " + std::to_string(elapsed) + " s");

  std::ostringstream d;
  d << report.verified << '/' << config.instance_count << " verified by the campaign, " << rechecked
    << " re-verified; " << report.total_edges << " edges, " << report.bodies << " bodies; " << elapsed << " s";
  v.detail = d.str();
  return v;
}

Verdict fixture_indices() {
  Verdict v;
  const std::vector<std::pair<std::string, Color>> exact = {
      {"k33", 6}, {"k4_subdivided_edge", 6}, {"complement_c6", 6}, {"cube_q3", 4}, {"c5", 4}};
  std::ostringstream d;
  for (const auto& [name, want] : exact) {
    const auto start = Clock::now();
    const auto got = star_chromatic_index(named_graph(name), 7);
    const double t = seconds_since(start);
    d << name << '=' << (got ? std::to_string(*got) : ">7") << ' ';
    if (got != want) v.fail(name + " has index " + (got ? std::to_string(*got) : ">7") + ", expected " + std::to_string(want));
    if (t > kFixtureBudgetSeconds) v.fail(name + " took " + std::to_string(t) + " s");
  }
  for (const auto& name : named_graph_names()) {
    const auto start = Clock::now();
    const auto got = star_chromatic_index(named_graph(name), 7);
    if (!got) v.fail(name + " needs more than 7 colors");
    if (seconds_since(start) > kFixtureBudgetSeconds) v.fail(name + " exceeded the time budget");
  }
  d << "; all " << named_graph_names().size() << " fixtures <= 7";
  v.detail = d.str();
  return v;
}

Verdict cycle_cross_validation() {
  Verdict v;
  std::mt19937_64 rng(kSeed);
  std::size_t fallbacks = 0;
  const DiagnosticSink diag = [&](const std::string&) { ++fallbacks; };
  std::size_t general = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    if (n == 5) continue;
    for (int k = 0; k < 200; ++k, ++general) {
      const auto inst = testing::random_unequal_instance(n, rng);
      const auto c = color_cycle_lists(inst, diag);
      if (!testing::respects(inst, c) || !brute::is_star(testing::ring(n), c)) {
        v.fail("cycle procedure failed on n=" + std::to_string(n));
      }
    }
  }
  std::size_t fives = 0;
  for (int k = 0; k < 500; ++k, ++fives) {
    const auto inst = testing::random_five_cycle_instance(rng);
    const auto c = color_five_cycle(inst, diag);
    if (!testing::respects(inst, c) || !brute::is_star(testing::ring(5), c)) v.fail("5-cycle procedure failed");
  }
  if (fallbacks) v.fail(std::to_string(fallbacks) + " constructive runs needed the exact search");

  std::size_t dp = 0;
  std::size_t feasible = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int k = 0; k < 300; ++k, ++dp) {
      const auto inst = testing::random_small_palette_instance(n, rng);
      const auto fast = dp_cycle_color(inst);
      const auto slow = brute::least_cycle_coloring(inst.lists);
      if (fast.has_value() != slow.has_value()) v.fail("feasibility differs on n=" + std::to_string(n));
      if (fast && (!testing::respects(inst, *fast) || !brute::is_star(testing::ring(n), *fast))) {
        v.fail("exact search returned an invalid coloring on n=" + std::to_string(n));
      }
      feasible += slow.has_value();
    }
  }
  std::ostringstream d;
  d << general << " general, " << fives << " five-cycle instances clean; exact search agreed on " << dp
    << " instances (" << feasible << " feasible)";
  v.detail = d.str();
  return v;
}

// Line-graph distances from `e`, computed here by breadth-first search.
std::vector<std::size_t> distances_from(const Multigraph& g, EdgeId e) {
  constexpr auto kFar = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.edge_count(), kFar);
  std::deque<EdgeId> queue{e};
  dist[e.index()] = 0;
  while (!queue.empty()) {
    const EdgeId a = queue.front();
    queue.pop_front();
    if (dist[a.index()] == 2) continue;
    for (Vertex w : {g.endpoints(a).u, g.endpoints(a).v}) {
      for (EdgeId b : g.incident(w)) {
        if (dist[b.index()] == kFar) {
          dist[b.index()] = dist[a.index()] + 1;
          queue.push_back(b);
        }
      }
    }
  }
  return dist;
}

void audit_body(const BodyAudit& a, Verdict& v) {
  const auto& g = a.body;
  // Cover matching: a matching meeting every degree-3 vertex.
  std::vector<int> hit(g.vertex_count(), 0);
  for (EdgeId e : a.cover_matching) {
    ++hit[g.endpoints(e).u];
    ++hit[g.endpoints(e).v];
  }
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (hit[x] > 1) v.fail("cover matching meets a vertex twice");
    if (g.degree(x) == 3 && hit[x] != 1) v.fail("cover matching misses a degree-3 vertex");
  }
  // 2-factor: closed, vertex-disjoint cycles through every vertex.
  std::vector<int> on_cycle(g.vertex_count(), 0);
  for (const auto& cyc : a.cactus.cycles) {
    std::set<Vertex> vs;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (!g.adjacent_edges(cyc[i], cyc[(i + 1) % cyc.size()])) v.fail("cycle edges are not consecutive");
      vs.insert(g.endpoints(cyc[i]).u);
      vs.insert(g.endpoints(cyc[i]).v);
    }
    if (vs.size() != cyc.size()) v.fail("a cycle repeats a vertex");
    for (Vertex x : vs) ++on_cycle[x];
  }
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (on_cycle[x] != 1) v.fail("2-factor does not cover each vertex exactly once");
  }
  // At most four M' edges within distance 2 of any edge.
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto dist = distances_from(g, EdgeId{e});
    std::size_t near = 0;
    for (EdgeId f : a.cactus.leftover_matching) near += f.index() != e && dist[f.index()] <= 2;
    if (near > 4) v.fail("an edge sees " + std::to_string(near) + " M' edges within distance 2");
  }
  // List sizes after each pruning stage.
  for (const auto& cyc : a.cactus.cycles) {
    ColorSet all;
    for (EdgeId e : cyc) {
      if (a.after_matching[e].size() < 3) v.fail("cycle list below 3 after M' pruning");
      if (a.after_connectors[e].size() < 3) v.fail("cycle list below 3 after connector pruning");
      all.insert(a.after_connectors[e].begin(), a.after_connectors[e].end());
    }
    if (cyc.size() == 5 && all.size() < 4) v.fail("5-cycle union below 4 after connector pruning");
  }
  for (EdgeId e : a.cactus.connectors) {
    if (a.after_matching[e].size() < 3) v.fail("connector list below 3 after M' pruning");
  }
}

Verdict decomposition_invariants() {
  Verdict v;
  const auto config = campaign();
  std::size_t bodies = 0;
  std::size_t reached = 0;
  for (std::size_t i = 0; i < config.instance_count; ++i) {
    const auto inst = make_fuzz_instance(config, i);
    std::size_t before = bodies;
    ColorerOptions options;
    options.on_body = [&](const BodyAudit& a) {
      ++bodies;
      audit_body(a, v);
    };
    try {
      star_edge_color_list(inst.graph, inst.lists, options);
    } catch (const std::exception& e) {
      v.fail("instance " + std::to_string(i) + ": " + e.what());
    }
    reached += bodies > before;
  }
  if (bodies == 0) v.fail("no instance reached the 2-connected stage");
  v.detail = std::to_string(bodies) + " bodies audited across " + std::to_string(reached) + " instances";
  return v;
}

Verdict oracle_agreement() {
  Verdict v;
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_int_distribution<std::size_t> size(2, 10);
  std::size_t done = 0;
  std::size_t edges = 0;
  while (done < 200) {
    const bool parallel = done % 2 == 0;
    const std::size_t n = parallel ? size(rng) : std::max<std::size_t>(4, size(rng));
    const auto g = random_subcubic(n, rng, done % 4 == 0 ? 0.0 : 0.2, parallel);
    if (g.edge_count() == 0 || g.edge_count() > 16) continue;
    ++done;
    edges += g.edge_count();
    const auto lists = ListAssignment::uniform(g.edge_count(), 7);
    const auto exact = exhaustive_star_color(g, lists);
    if (!exact) {
      v.fail("exhaustive search found no coloring for instance " + std::to_string(done));
    } else if (!respects_lists(*exact, lists) || find_violation(g, *exact)) {
      v.fail("exhaustive search returned an invalid coloring");
    }
    try {
      const auto c = star_edge_color_list(g, lists);
      if (!respects_lists(c, lists) || find_violation(g, c)) v.fail("colorer returned an invalid coloring");
    } catch (const std::exception& e) {
      v.fail(std::string("colorer failed: ") + e.what());
    }
  }
  v.detail = std::to_string(done) + " instances, " + std::to_string(edges) + " edges, both sides feasible and verified";
  return v;
}

}  // namespace
}  // namespace starlit

int main() {
  using namespace starlit;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 random 7-list campaign (1000 instances, n<=40, parallel edges, palette 21)", random_list_campaign},
      {"2 exact star chromatic indices of the fixtures", fixture_indices},
      {"3 cycle procedures and exact cycle search", cycle_cross_validation},
      {"4 decomposition invariants on every 2-connected body", decomposition_invariants},
      {"5 exhaustive search and colorer agree (200 instances, m<=16, lists {1..7})", oracle_agreement},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.fail(std::string("uncaught: ") + e.what());
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << name << ": " << v.detail << " [" << seconds_since(start)
              << " s]\n";
    for (const auto& p : v.problems) std::cout << "    " << p << '\n';
  }
  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << '\n';
  return all ? 0 : 1;
}
