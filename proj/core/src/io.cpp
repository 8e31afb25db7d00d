#include "hyperavg/io.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "hyperavg/families.hpp"

namespace hyperavg {
namespace {

struct LineReader {
  std::istream& in;
  std::string name;
  std::size_t lineno = 0;

  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const std::size_t i = line.find_first_not_of(" \t");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& why) const {
    raise(Errc::parse_error, name + ":" + std::to_string(lineno) + ": " + why);
  }
};

std::vector<std::uint64_t> parse_indices(LineReader& reader, const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (ss >> tok) {
    std::uint64_t value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') reader.fail("expected a non-negative integer, got '" + tok + "'");
      const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        reader.fail("integer '" + tok + "' out of range");
      }
      value = value * 10 + digit;
    }
    out.push_back(value);
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_header(LineReader& reader) {
  const auto line = reader.next();
  if (!line) reader.fail("missing `n m` header");
  const auto nums = parse_indices(reader, *line);
  if (nums.size() != 2) reader.fail("header must be exactly `n m`");
  return {static_cast<std::size_t>(nums[0]), static_cast<std::size_t>(nums[1])};
}

Vertex as_vertex(LineReader& reader, std::uint64_t v, std::size_t n) {
  if (v >= n) {
    reader.fail("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
  }
  return static_cast<Vertex>(v);
}

void expect_eof(LineReader& reader) {
  if (reader.next()) reader.fail("unexpected content after the last edge");
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in, const std::string& name) {
  LineReader reader{in, name};
  const auto [n, m] = parse_header(reader);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto line = reader.next();
    if (!line) reader.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    const auto nums = parse_indices(reader, *line);
    if (nums.empty()) reader.fail("empty edge line");
    std::vector<Vertex> edge;
    edge.reserve(nums.size());
    for (std::uint64_t v : nums) edge.push_back(as_vertex(reader, v, n));
    edges.push_back(std::move(edge));
  }
  expect_eof(reader);
  return Hypergraph(n, std::move(edges));
}

Graph read_graph(std::istream& in, const std::string& name) {
  LineReader reader{in, name};
  const auto [n, m] = parse_header(reader);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto line = reader.next();
    if (!line) reader.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    const auto nums = parse_indices(reader, *line);
    if (nums.size() != 2) reader.fail("graph edge line must be `u v`");
    edges.emplace_back(as_vertex(reader, nums[0], n), as_vertex(reader, nums[1], n));
  }
  expect_eof(reader);
  return Graph(n, edges);
}

namespace {

std::ifstream open_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) raise(Errc::parse_error, path + ": cannot open file");
  return f;
}

}  // namespace

Hypergraph read_hypergraph_file(const std::string& path) {
  auto f = open_file(path);
  return read_hypergraph(f, path);
}

Graph read_graph_file(const std::string& path) {
  auto f = open_file(path);
  return read_graph(f, path);
}

std::string write_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edge_pairs()) out << u << ' ' << v << '\n';
  return out.str();
}

Instance::Instance(Hypergraph h, std::string name) : h_(std::move(h)), name_(std::move(name)) {}
Instance::Instance(Graph g, std::string name) : g_(std::move(g)), name_(std::move(name)) {}

Hypergraph Instance::to_hypergraph() const {
  if (h_) return *h_;
  return hypergraph_from_graph(*g_);
}

Graph Instance::to_graph() const {
  if (g_) return *g_;
  const auto r = uniform_edge_size(*h_);
  if (!r || *r != 2) {
    raise(Errc::bad_parameters, "instance '" + name_ + "' is not a 2-uniform hypergraph");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(h_->edge_count());
  for (const auto& e : h_->edges()) pairs.emplace_back(e[0], e[1]);
  return Graph(h_->vertex_count(), pairs);  // rejects repeated edges
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t builtin_number(const std::string& spec, const std::string& token) {
  if (token.empty()) raise(Errc::unknown_builtin, "missing number in '" + spec + "'");
  std::uint64_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') {
      raise(Errc::unknown_builtin, "bad number '" + token + "' in '" + spec + "'");
    }
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
      raise(Errc::unknown_builtin, "number '" + token + "' out of range in '" + spec + "'");
    }
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace

Instance load_instance(const std::string& spec) {
  if (ends_with(spec, ".hg")) return Instance(read_hypergraph_file(spec), spec);
  if (ends_with(spec, ".gr")) return Instance(read_graph_file(spec), spec);
  if (spec.find('/') != std::string::npos || spec.find('.') != std::string::npos) {
    raise(Errc::bad_parameters, "'" + spec + "' looks like a file path; use .hg or .gr");
  }
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto arity = [&](std::size_t want) {
    if (parts.size() != want) {
      raise(Errc::unknown_builtin, "builtin '" + spec + "' has the wrong number of parameters");
    }
  };
  if (kind == "star") {
    arity(2);
    const std::uint64_t n = builtin_number(spec, parts[1]);
    return Instance(star_graph(static_cast<std::size_t>(n) + 1), spec);
  }
  if (kind == "path") {
    arity(2);
    return Instance(path_graph(static_cast<std::size_t>(builtin_number(spec, parts[1]))), spec);
  }
  if (kind == "cycle") {
    arity(2);
    return Instance(cycle_graph(static_cast<std::size_t>(builtin_number(spec, parts[1]))), spec);
  }
  if (kind == "complete") {
    arity(2);
    return Instance(complete_graph(static_cast<std::size_t>(builtin_number(spec, parts[1]))),
                    spec);
  }
  if (kind == "knr") {
    arity(3);
    const std::uint64_t n = builtin_number(spec, parts[1]);
    const std::uint64_t r = builtin_number(spec, parts[2]);
    return Instance(
        complete_r_uniform(static_cast<std::size_t>(n), static_cast<std::size_t>(r)), spec);
  }
  if (kind == "petersen") {
    arity(1);
    return Instance(petersen_graph(), spec);
  }
  if (kind == "q3") {
    arity(1);
    return Instance(cube_graph(), spec);
  }
  if (kind == "fano") {
    arity(1);
    return Instance(fano_plane(), spec);
  }
  if (kind == "hprime") {
    arity(1);
    return Instance(Hypergraph(4, {{0, 1}, {0, 1}, {1, 2, 3}}), spec);
  }
  raise(Errc::unknown_builtin,
        "unknown builtin '" + spec +
            "' (expected star:n, path:n, cycle:n, complete:n, knr:n:r, petersen, q3, fano, "
            "hprime, or a .hg/.gr file)");
}

}  // namespace hyperavg
