#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hyperavg/hypergraph.hpp"

namespace hyperavg {

// Text formats. ".hg": line 1 is `n m`, then m lines of space-separated
// vertex indices, one edge per line. ".gr": line 1 is `n m`, then m lines
// `u v`. Lines starting with '#' are comments; indices are 0-based;
// whitespace-tolerant; newline is LF.
Hypergraph read_hypergraph(std::istream& in, const std::string& name = "<stream>");
Hypergraph read_hypergraph_file(const std::string& path);
Graph read_graph(std::istream& in, const std::string& name = "<stream>");
Graph read_graph_file(const std::string& path);

// Canonical form: sorted edges, single spaces, LF.
std::string write_hypergraph(const Hypergraph& h);
std::string write_graph(const Graph& g);

// A loaded instance is natively a hypergraph or a graph; each view converts
// on demand. A graph becomes its 2-uniform hypergraph; a hypergraph converts
// back only when it is 2-uniform with no repeated edges.
class Instance {
 public:
  explicit Instance(Hypergraph h, std::string name);
  explicit Instance(Graph g, std::string name);

  const std::string& name() const { return name_; }
  bool is_graph() const { return g_.has_value(); }
  Hypergraph to_hypergraph() const;
  Graph to_graph() const;

 private:
  std::optional<Hypergraph> h_;
  std::optional<Graph> g_;
  std::string name_;
};

// Accepts a file path (.hg or .gr) or a builtin name:
//   star:n     star with n edges (n+1 vertices: center 0 plus n leaves)
//   path:n     path on n vertices
//   cycle:n    cycle on n vertices
//   complete:n complete graph on n vertices
//   knr:n:r    all r-subsets of n vertices
//   petersen   the Petersen graph
//   q3         the 3-dimensional hypercube
//   fano       the Fano plane (7 points, 7 lines)
//   hprime     4 vertices, edges {0,1}, {0,1}, {1,2,3}
Instance load_instance(const std::string& spec);

}  // namespace hyperavg
