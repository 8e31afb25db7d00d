#include "hyperavg/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace hyperavg {
namespace {

std::string vertex_str(Vertex v) { return std::to_string(static_cast<unsigned long>(v)); }

// Union-find with path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[a] = b;
  }

 private:
  std::vector<Vertex> parent_;
};

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges)
    : n_(n), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.empty()) raise(Errc::empty_edge, "edge " + std::to_string(i) + " is empty");
    std::sort(e.begin(), e.end());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] >= n_) {
        raise(Errc::vertex_out_of_range, "edge " + std::to_string(i) + " contains vertex " +
                                             vertex_str(e[k]) + " but n = " + std::to_string(n_));
      }
      if (k > 0 && e[k] == e[k - 1]) {
        raise(Errc::duplicate_vertex_in_edge,
              "edge " + std::to_string(i) + " repeats vertex " + vertex_str(e[k]));
      }
    }
  }
}

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n), adj_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n_ || v >= n_) {
      raise(Errc::vertex_out_of_range, "edge {" + vertex_str(u) + "," + vertex_str(v) +
                                           "} out of range for n = " + std::to_string(n_));
    }
    if (u == v) raise(Errc::same_vertex, "loop at vertex " + vertex_str(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (std::size_t u = 0; u < n_; ++u) {
    auto& a = adj_[u];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      raise(Errc::bad_parameters, "parallel edge at vertex " + std::to_string(u));
    }
  }
  m_ = edges.size();
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
  if (u >= n_) raise(Errc::vertex_out_of_range, "vertex " + vertex_str(u));
  return adj_[u];
}

std::size_t Graph::degree(Vertex u) const { return neighbors(u).size(); }

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  std::size_t d = adj_[0].size();
  for (const auto& a : adj_) {
    if (a.size() != d) return std::nullopt;
  }
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (v > u) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

std::uint64_t codegree(const Hypergraph& h, Vertex u, Vertex v) {
  const std::size_t n = h.vertex_count();
  if (u >= n || v >= n) {
    raise(Errc::vertex_out_of_range,
          "pair {" + vertex_str(u) + "," + vertex_str(v) + "} out of range");
  }
  if (u == v) raise(Errc::same_vertex, "codegree requires two distinct vertices");
  std::uint64_t count = 0;
  for (const auto& e : h.edges()) {
    const bool has_u = std::binary_search(e.begin(), e.end(), u);
    const bool has_v = std::binary_search(e.begin(), e.end(), v);
    if (has_u && has_v) ++count;
  }
  return count;
}

std::size_t min_edge_size(const Hypergraph& h) {
  if (h.edge_count() == 0) raise(Errc::no_edges, "hypergraph has no edges");
  std::size_t r = h.edge(0).size();
  for (const auto& e : h.edges()) r = std::min(r, e.size());
  return r;
}

std::size_t max_edge_size(const Hypergraph& h) {
  if (h.edge_count() == 0) raise(Errc::no_edges, "hypergraph has no edges");
  std::size_t r = h.edge(0).size();
  for (const auto& e : h.edges()) r = std::max(r, e.size());
  return r;
}

std::optional<std::size_t> uniform_edge_size(const Hypergraph& h) {
  if (h.edge_count() == 0) return std::nullopt;
  const std::size_t r = h.edge(0).size();
  for (const auto& e : h.edges()) {
    if (e.size() != r) return std::nullopt;
  }
  return r;
}

bool is_connected(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  if (n <= 1) return true;
  UnionFind uf(n);
  for (const auto& e : h.edges()) {
    for (std::size_t k = 1; k < e.size(); ++k) uf.unite(e[0], e[k]);
  }
  const Vertex root = uf.find(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (uf.find(static_cast<Vertex>(v)) != root) return false;
  }
  return true;
}

std::optional<std::uint64_t> is_codegree_regular(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  if (n < 2) raise(Errc::too_few_vertices, "codegree regularity needs n >= 2");
  // Accumulate all pairwise codegrees in one pass over the edges.
  std::vector<std::uint64_t> pair_count(n * (n - 1) / 2, 0);
  auto pair_index = [n](std::size_t u, std::size_t v) {
    // u < v
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
  };
  for (const auto& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        ++pair_count[pair_index(e[a], e[b])];
      }
    }
  }
  const std::uint64_t d = pair_count[0];
  for (std::uint64_t c : pair_count) {
    if (c != d) return std::nullopt;
  }
  return d;
}

MultigraphEdgeList clique_expansion(const Hypergraph& h) {
  MultigraphEdgeList out;
  out.n = h.vertex_count();
  for (const auto& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        out.pairs.emplace_back(e[a], e[b]);
      }
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

Hypergraph neighborhood_hypergraph(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    auto nb = g.neighbors(static_cast<Vertex>(u));
    if (nb.empty()) {
      raise(Errc::isolated_vertex,
            "vertex " + std::to_string(u) + " has empty neighborhood");
    }
    edges.emplace_back(nb.begin(), nb.end());
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph hypergraph_from_graph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edge_pairs()) edges.push_back({u, v});
  return Hypergraph(g.vertex_count(), std::move(edges));
}

std::uint64_t codegree_regular_edge_count(std::uint64_t n, std::uint64_t r, std::uint64_t d) {
  if (n < 2 || r < 2 || r > n || d == 0) {
    raise(Errc::bad_parameters, "need n >= 2, 2 <= r <= n, d >= 1");
  }
  // n(n-1)d may overflow; split the division across the factors first.
  const std::uint64_t rr = r * (r - 1);
  unsigned __int128 num = static_cast<unsigned __int128>(n) * (n - 1);
  num *= d;
  if (num % rr != 0) {
    raise(Errc::non_integral_count, "n(n-1)d = " + std::to_string(n) + "*" + std::to_string(n - 1) +
                                        "*" + std::to_string(d) + " not divisible by r(r-1) = " +
                                        std::to_string(rr));
  }
  num /= rr;
  if (num > std::numeric_limits<std::uint64_t>::max()) {
    raise(Errc::overflow, "edge count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(num);
}

}  // namespace hyperavg
