#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperavg/errors.hpp"

namespace hyperavg {

using Vertex = std::uint32_t;

// Hypergraph on vertices {0, ..., n-1}. The edge list is a multiset: repeated
// edges appear as repeated entries and weight the uniform edge draw
// accordingly. Each edge is canonicalized to strictly ascending vertex order
// at construction; duplicate vertices inside one edge are rejected.
class Hypergraph {
 public:
  Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Vertex> edge(std::size_t i) const { return edges_[i]; }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> edges_;
};

// Simple undirected graph on {0, ..., n-1}: no loops, no parallel edges.
// Adjacency lists are kept sorted ascending.
class Graph {
 public:
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }
  std::span<const Vertex> neighbors(Vertex u) const;
  std::size_t degree(Vertex u) const;
  // Common degree d if G is regular, empty otherwise.
  std::optional<std::size_t> regular_degree() const;
  // Edge list in lexicographic (u < v) order.
  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

// Multigraph edge list of the clique expansion G_H; the multiplicity of the
// pair {u,v} equals the codegree d(u,v).
struct MultigraphEdgeList {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

// Number of edges (counted with multiplicity) containing both u and v.
std::uint64_t codegree(const Hypergraph& h, Vertex u, Vertex v);

std::size_t min_edge_size(const Hypergraph& h);
std::size_t max_edge_size(const Hypergraph& h);

// r if every edge has exactly r vertices, empty otherwise.
std::optional<std::size_t> uniform_edge_size(const Hypergraph& h);

// True iff no nonempty proper vertex subset separates all edges (union-find
// over each edge's vertex set). Isolated vertices disconnect H when n >= 2;
// a single vertex with no edges is vacuously connected.
bool is_connected(const Hypergraph& h);

// The common codegree d when d(u,v) = d for all pairs u != v, else empty.
std::optional<std::uint64_t> is_codegree_regular(const Hypergraph& h);

MultigraphEdgeList clique_expansion(const Hypergraph& h);

// H_G: one edge per vertex u of G, namely N_G(u), as a multiset (repeated
// neighborhoods repeat). Edge i corresponds to vertex i.
Hypergraph neighborhood_hypergraph(const Graph& g);

// The 2-uniform hypergraph with one edge per graph edge.
Hypergraph hypergraph_from_graph(const Graph& g);

// |E| = n(n-1)d / (r(r-1)) for an r-uniform codegree-regular hypergraph;
// errors with NonIntegralCount when the division is not exact.
std::uint64_t codegree_regular_edge_count(std::uint64_t n, std::uint64_t r, std::uint64_t d);

}  // namespace hyperavg
