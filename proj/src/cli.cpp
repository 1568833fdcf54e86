#include "starlit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "starlit/colorer.hpp"
#include "starlit/fuzz.hpp"
#include "starlit/generators.hpp"
#include "starlit/io.hpp"
#include "starlit/oracle.hpp"
#include "starlit/verifier.hpp"

namespace starlit {
namespace {

struct ColorArgs {
  std::string graph;
  std::string out;
  std::string lists;
  Color uniform_k = 0;
  bool dump_cactus = false;
};

struct VerifyArgs {
  std::string graph;
  std::string coloring;
  std::string lists;
};

struct ChiArgs {
  std::string graph;
  Color max_k = 7;
  std::size_t max_edges = OracleLimits{}.max_edges;
};

struct GenArgs {
  std::string kind;
  std::string name;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool allow_parallel = false;
  double delete_prob = 0.2;
};

void print_ids(std::ostream& out, std::string_view label, std::span<const EdgeId> ids) {
  out << label;
  for (EdgeId e : ids) out << ' ' << e.value;
  out << '\n';
}

void dump_body(std::ostream& err, const BodyAudit& audit, std::size_t index) {
  err << "body " << index << " vertices " << audit.body.vertex_count() << " edges " << audit.body.edge_count() << '\n';
  for (const auto& cycle : audit.cactus.cycles) print_ids(err, "cycle", cycle);
  for (EdgeId e : audit.cactus.connectors) print_ids(err, "connector", std::span(&e, 1));
  for (EdgeId e : audit.cactus.leftover_matching) print_ids(err, "matching", std::span(&e, 1));
}

int cmd_color(const ColorArgs& a, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(a.graph);
  if (a.lists.empty() == (a.uniform_k == 0)) throw InputError("give exactly one of --lists and --uniform-k");
  const ListAssignment lists = a.lists.empty() ? ListAssignment::uniform(g.edge_count(), a.uniform_k)
                                               : load_lists(a.lists, g.edge_count());

  ColorerOptions options;
  std::size_t bodies = 0;
  if (a.dump_cactus) options.on_body = [&](const BodyAudit& audit) { dump_body(err, audit, bodies++); };
  options.diagnostics = [&](const std::string& msg) { err << "note: " << msg << '\n'; };

  const EdgeColoring c = star_edge_color_list(g, lists, options);
  if (!respects_lists(c, lists) || find_violation(g, c)) {
    throw InvariantFailure("produced coloring failed verification");
  }
  if (a.out.empty()) {
    write_coloring(out, c);
  } else {
    std::ofstream file(a.out);
    if (!file) throw InputError("cannot write " + a.out);
    write_coloring(file, c);
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Multigraph g = load_graph(a.graph);
  const EdgeColoring c = load_coloring(a.coloring, g.edge_count());
  std::optional<ListAssignment> lists;
  if (!a.lists.empty()) lists = load_lists(a.lists, g.edge_count());

  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!c.has(EdgeId{i})) {
      out << "uncolored edge " << i << '\n';
      return kExitFailed;
    }
  }
  if (auto bad = find_violation(g, c)) {
    out << "violation " << to_string(bad->kind);
    for (EdgeId e : bad->witness) out << ' ' << e.value;
    out << '\n';
    return kExitFailed;
  }
  if (lists) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const EdgeId e{i};
      if (!(*lists)[e].contains(*c.get(e))) {
        out << "color " << *c.get(e) << " of edge " << i << " is not in its list\n";
        return kExitFailed;
      }
    }
  }
  out << "ok\n";
  return kExitOk;
}

int cmd_chi(const ChiArgs& a, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(a.graph);
  OracleLimits limits;
  if (a.max_edges != limits.max_edges) {
    err << "warning: exhaustive search guard set to " << a.max_edges << " edges; large graphs may not finish\n";
    limits.max_edges = a.max_edges;
  }
  if (auto k = star_chromatic_index(g, a.max_k, limits)) {
    out << *k << '\n';
  } else {
    out << '>' << a.max_k << '\n';
  }
  return kExitOk;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.kind == "named") {
    if (a.name.empty()) throw InputError("gen named needs a graph name");
    write_graph(out, named_graph(a.name));
    return kExitOk;
  }
  std::mt19937_64 rng(a.seed);
  if (a.kind == "random_cubic") {
    write_graph(out, random_cubic(a.n, rng, a.allow_parallel));
  } else if (a.kind == "random_subcubic") {
    write_graph(out, random_subcubic(a.n, rng, a.delete_prob, a.allow_parallel));
  } else {
    throw InputError("unknown generator '" + a.kind + "'");
  }
  return kExitOk;
}

int cmd_fuzz(const FuzzConfig& config, bool timings, std::ostream& out) {
  const FuzzReport report = run_fuzz(config, default_diagnostics_dir());
  print_report(out, config, report, timings);
  return report.failures.empty() ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star edge-colorings of subcubic multigraphs from 7-color lists", "starlit"};
  app.require_subcommand(1);

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Color a graph from lists; writes c <edge> <color> lines");
  color_cmd->add_option("graph", color.graph, "Graph file")->required();
  color_cmd->add_option("out", color.out, "Output file (stdout when omitted)");
  auto* lists_opt = color_cmd->add_option("--lists", color.lists, "List file");
  color_cmd->add_option("--uniform-k", color.uniform_k, "Give every edge the list {1..k}")
      ->excludes(lists_opt)
      ->check(CLI::PositiveNumber);
  color_cmd->add_flag("--dump-cactus", color.dump_cactus, "Print each body's cycles, connectors and M' to stderr");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring; exit 1 with a witness on violation");
  verify_cmd->add_option("graph", verify.graph, "Graph file")->required();
  verify_cmd->add_option("coloring", verify.coloring, "Coloring file")->required();
  verify_cmd->add_option("--lists", verify.lists, "Also require colors from these lists");

  ChiArgs chi;
  auto* chi_cmd = app.add_subcommand("chi-star", "Exact star chromatic index by exhaustive search");
  chi_cmd->add_option("graph", chi.graph, "Graph file")->required();
  chi_cmd->add_option("--max-k", chi.max_k, "Largest palette tried")->capture_default_str();
  chi_cmd->add_option("--max-edges", chi.max_edges, "Override the search size guard")->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a named or random graph to stdout");
  gen_cmd->add_option("kind", gen.kind, "named, random_cubic or random_subcubic")->required();
  gen_cmd->add_option("name", gen.name, "Graph name for gen named");
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_flag("--allow-parallel", gen.allow_parallel, "Keep parallel edges");
  gen_cmd->add_option("--delete-prob", gen.delete_prob, "Edge deletion probability")->capture_default_str();

  FuzzConfig fuzz;
  bool no_timings = false;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Color random instances and verify every result");
  fuzz_cmd->add_option("--count", fuzz.instance_count, "Number of instances")->capture_default_str();
  fuzz_cmd->add_option("--max-n", fuzz.max_vertices, "Largest vertex count")->capture_default_str();
  fuzz_cmd->add_option("--palette", fuzz.palette_size, "Lists are 7-subsets of {1..palette}")->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz.seed, "Campaign seed")->capture_default_str();
  fuzz_cmd->add_flag("--allow-parallel", fuzz.allow_parallel, "Allow parallel edges");
  fuzz_cmd->add_flag("--no-timings", no_timings, "Omit the timing line");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (color_cmd->parsed()) return cmd_color(color, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (chi_cmd->parsed()) return cmd_chi(chi, out, err);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    return cmd_fuzz(fuzz, !no_timings, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ColoringFailure& e) {
    err << "internal failure: " << e.what() << '\n';
    const auto bundle = write_diagnostics_bundle(e, default_diagnostics_dir());
    err << "diagnostics bundle: " << bundle.string() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace starlit
