#include "starlit/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace starlit {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-comment line split into whitespace tokens; false at EOF.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, line_)) {
      ++number_;
      tokens.clear();
      std::string_view rest = line_;
      while (!rest.empty()) {
        const auto start = rest.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto end = rest.find_first_of(" \t\r");
        tokens.push_back(rest.substr(0, end));
        rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
      }
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError("line " + std::to_string(number_) + ": " + message);
  }

  template <class T>
  T number(std::string_view token, const char* what) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) fail(std::string("bad ") + what + " '" + std::string(token) + "'");
    return value;
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t number_ = 0;
};

std::size_t edge_index(const LineReader& r, std::string_view token, std::size_t edge_count) {
  const auto id = r.number<std::size_t>(token, "edge id");
  if (id >= edge_count) r.fail("edge id " + std::to_string(id) + " out of range (m = " + std::to_string(edge_count) + ")");
  return id;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

}  // namespace

Multigraph read_graph(std::istream& in) {
  LineReader r(in);
  std::vector<std::string_view> t;
  if (!r.next(t)) throw InputError("empty graph file");
  if (t.size() != 3 || t[0] != "p") r.fail("expected 'p <n> <m>'");
  const auto n = r.number<std::uint32_t>(t[1], "vertex count");
  const auto m = r.number<std::uint32_t>(t[2], "edge count");

  Multigraph g(n);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (!r.next(t)) throw InputError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
    if (t.size() != 3 || t[0] != "e") r.fail("expected 'e <u> <v>'");
    const auto u = r.number<Vertex>(t[1], "vertex");
    const auto v = r.number<Vertex>(t[2], "vertex");
    try {
      g.add_edge(u, v);
    } catch (const InputError& err) {
      r.fail(err.what());
    }
  }
  if (r.next(t)) r.fail("unexpected content after " + std::to_string(m) + " edges");
  return g;
}

ListAssignment read_lists(std::istream& in, std::size_t edge_count) {
  LineReader r(in);
  std::vector<std::string_view> t;
  std::vector<std::optional<ColorSet>> lists(edge_count);
  while (r.next(t)) {
    if (t[0] != "l" || t.size() < 2) r.fail("expected 'l <edge_id> <colors...>'");
    const std::size_t id = edge_index(r, t[1], edge_count);
    if (lists[id]) r.fail("duplicate list for edge " + std::to_string(id));
    ColorSet s;
    for (std::size_t k = 2; k < t.size(); ++k) s.insert(r.number<Color>(t[k], "color"));
    lists[id] = std::move(s);
  }
  ListAssignment out(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) {
    if (!lists[i]) throw InputError("no list for edge " + std::to_string(i));
    out[EdgeId{i}] = std::move(*lists[i]);
  }
  return out;
}

EdgeColoring read_coloring(std::istream& in, std::size_t edge_count) {
  LineReader r(in);
  std::vector<std::string_view> t;
  EdgeColoring c(edge_count);
  while (r.next(t)) {
    if (t.size() != 3 || t[0] != "c") r.fail("expected 'c <edge_id> <color>'");
    const EdgeId e{edge_index(r, t[1], edge_count)};
    if (c.has(e)) r.fail("duplicate color for edge " + std::to_string(e.value));
    c.set(e, r.number<Color>(t[2], "color"));
  }
  return c;
}

void write_graph(std::ostream& out, const Multigraph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
  for (std::size_t i = 0; i < lists.edge_count(); ++i) {
    out << "l " << i;
    for (Color c : lists[EdgeId{i}]) out << ' ' << c;
    out << '\n';
  }
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
  for (std::size_t i = 0; i < c.edge_count(); ++i) {
    if (auto col = c.get(EdgeId{i})) out << "c " << i << ' ' << *col << '\n';
  }
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream s;
  write_graph(s, g);
  return s.str();
}

std::string format_lists(const ListAssignment& lists) {
  std::ostringstream s;
  write_lists(s, lists);
  return s.str();
}

std::string format_coloring(const EdgeColoring& c) {
  std::ostringstream s;
  write_coloring(s, c);
  return s.str();
}

Multigraph load_graph(const std::filesystem::path& path) {
  auto in = open(path);
  return read_graph(in);
}

ListAssignment load_lists(const std::filesystem::path& path, std::size_t edge_count) {
  auto in = open(path);
  return read_lists(in, edge_count);
}

EdgeColoring load_coloring(const std::filesystem::path& path, std::size_t edge_count) {
  auto in = open(path);
  return read_coloring(in, edge_count);
}

}  // namespace starlit
