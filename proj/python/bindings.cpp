#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <set>
#include <sstream>

#include "starlit/colorer.hpp"
#include "starlit/cycles.hpp"
#include "starlit/decompose.hpp"
#include "starlit/fuzz.hpp"
#include "starlit/generators.hpp"
#include "starlit/io.hpp"
#include "starlit/oracle.hpp"
#include "starlit/verifier.hpp"

namespace py = pybind11;
using namespace starlit;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Multigraph make_graph(std::size_t n, const EdgeList& edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

ListAssignment make_lists(const std::vector<std::set<Color>>& lists) {
  return ListAssignment(std::vector<ColorSet>(lists.begin(), lists.end()));
}

std::vector<std::uint32_t> raw(const std::vector<EdgeId>& ids) {
  std::vector<std::uint32_t> out;
  for (EdgeId e : ids) out.push_back(e.value);
  return out;
}

std::vector<std::optional<Color>> colors_of(const EdgeColoring& c) {
  std::vector<std::optional<Color>> out(c.edge_count());
  for (std::size_t i = 0; i < c.edge_count(); ++i) out[i] = c.get(EdgeId{i});
  return out;
}

EdgeColoring coloring_from(const std::vector<std::optional<Color>>& colors) {
  EdgeColoring c(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i]) c.set(EdgeId{i}, *colors[i]);
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Star edge-colorings of subcubic multigraphs from 7-color lists";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantFailure>(m, "InvariantFailure", PyExc_RuntimeError);

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init([](std::size_t n, const EdgeList& edges) { return make_graph(n, edges); }), py::arg("n"),
           py::arg("edges") = EdgeList{})
      .def("add_edge", [](Multigraph& g, Vertex u, Vertex v) { return g.add_edge(u, v).value; })
      .def_property_readonly("vertex_count", &Multigraph::vertex_count)
      .def_property_readonly("edge_count", &Multigraph::edge_count)
      .def("edges",
           [](const Multigraph& g) {
             EdgeList out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("degree", &Multigraph::degree)
      .def("is_subcubic", &Multigraph::is_subcubic)
      .def("edges_within_distance",
           [](const Multigraph& g, std::uint32_t e, int radius) { return raw(g.edges_within_distance(EdgeId{e}, radius)); })
      .def("connected_components", &Multigraph::connected_components)
      .def("to_text", [](const Multigraph& g) { return format_graph(g); })
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return read_graph(in);
                  })
      .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
      .def("__repr__", [](const Multigraph& g) {
        return "Multigraph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("named_graph", [](const std::string& name) { return named_graph(name); });
  m.def("named_graph_names", &named_graph_names);

  m.def(
      "star_edge_color",
      [](const Multigraph& g, std::optional<std::vector<std::set<Color>>> lists, std::optional<Color> uniform_k) {
        if (lists.has_value() == uniform_k.has_value()) throw InputError("give exactly one of lists and uniform_k");
        const ListAssignment l = lists ? make_lists(*lists) : ListAssignment::uniform(g.edge_count(), *uniform_k);
        py::gil_scoped_release release;
        const EdgeColoring c = star_edge_color_list(g, l);
        std::vector<Color> out(c.edge_count());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = *c.get(EdgeId{i});
        return out;
      },
      py::arg("graph"), py::arg("lists") = py::none(), py::arg("uniform_k") = py::none(),
      "Star edge-coloring from per-edge lists (each of size >= 7) or from {1..uniform_k}.");

  m.def(
      "find_violation",
      [](const Multigraph& g, const std::vector<std::optional<Color>>& colors) -> std::optional<py::tuple> {
        const auto v = find_violation_partial(g, coloring_from(colors));
        if (!v) return std::nullopt;
        return py::make_tuple(std::string(to_string(v->kind)), raw(v->witness));
      },
      py::arg("graph"), py::arg("colors"),
      "None for a star coloring, else (kind, witness edge ids). Uncolored edges (None) are skipped.");

  m.def(
      "is_star_coloring",
      [](const Multigraph& g, const std::vector<Color>& colors) {
        EdgeColoring c(colors.size());
        for (std::size_t i = 0; i < colors.size(); ++i) c.set(EdgeId{i}, colors[i]);
        return !find_violation(g, c).has_value();
      },
      py::arg("graph"), py::arg("colors"));

  m.def(
      "star_chromatic_index",
      [](const Multigraph& g, Color max_k, std::size_t max_edges) {
        py::gil_scoped_release release;
        return star_chromatic_index(g, max_k, OracleLimits{max_edges});
      },
      py::arg("graph"), py::arg("max_k") = 7, py::arg("max_edges") = OracleLimits{}.max_edges);

  m.def(
      "exhaustive_star_color",
      [](const Multigraph& g, const std::vector<std::set<Color>>& lists, std::size_t max_edges) {
        py::gil_scoped_release release;
        const auto c = exhaustive_star_color(g, make_lists(lists), OracleLimits{max_edges});
        return c ? std::optional(colors_of(*c)) : std::nullopt;
      },
      py::arg("graph"), py::arg("lists"), py::arg("max_edges") = OracleLimits{}.max_edges);

  m.def(
      "decompose_cactus",
      [](const Multigraph& g) {
        const auto c = decompose_cactus(g);
        py::dict out;
        py::list cycles;
        for (const auto& cyc : c.cycles) cycles.append(raw(cyc));
        out["cycles"] = cycles;
        out["connectors"] = raw(c.connectors);
        out["leftover_matching"] = raw(c.leftover_matching);
        return out;
      },
      py::arg("graph"), "Cactus decomposition of a bridgeless body: cycles, connectors and M'.");

  m.def(
      "color_cycle",
      [](const std::vector<std::set<Color>>& lists) {
        return dp_cycle_color(CycleInstance{std::vector<ColorSet>(lists.begin(), lists.end())});
      },
      py::arg("lists"), "Least list star coloring of the cycle with these edge lists, or None.");

  m.def(
      "random_cubic",
      [](std::size_t n, std::uint64_t seed, bool allow_parallel) {
        std::mt19937_64 rng(seed);
        return random_cubic(n, rng, allow_parallel);
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("allow_parallel") = false);

  m.def(
      "random_subcubic",
      [](std::size_t n, std::uint64_t seed, double delete_prob, bool allow_parallel) {
        std::mt19937_64 rng(seed);
        return random_subcubic(n, rng, delete_prob, allow_parallel);
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("delete_prob") = 0.2, py::arg("allow_parallel") = false);

  m.def(
      "fuzz",
      [](std::size_t count, std::size_t max_n, Color palette, std::uint64_t seed, bool allow_parallel) {
        FuzzConfig config{count, max_n, palette, seed, allow_parallel};
        FuzzReport report;
        {
          py::gil_scoped_release release;
          report = run_fuzz(config);
        }
        py::dict out;
        out["instances"] = report.instances;
        out["verified"] = report.verified;
        out["bodies"] = report.bodies;
        py::list failures;
        for (const auto& f : report.failures) failures.append(py::make_tuple(f.index, f.reason));
        out["failures"] = failures;
        out["p50_ms"] = report.percentile_millis(0.5);
        out["max_ms"] = report.percentile_millis(1.0);
        return out;
      },
      py::arg("count") = 100, py::arg("max_n") = 20, py::arg("palette") = 21, py::arg("seed") = 0,
      py::arg("allow_parallel") = false);
}
