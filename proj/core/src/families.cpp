#include "hyperavg/families.hpp"

#include <string>

namespace hyperavg {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) raise(Errc::bad_parameters, what);
}

}  // namespace

Hypergraph star_hypergraph(std::size_t n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(n - 1);
  for (std::size_t v = 1; v < n; ++v) edges.push_back({0, static_cast<Vertex>(v)});
  return Hypergraph(n, std::move(edges));
}

Hypergraph path_hypergraph(std::size_t n) {
  require(n >= 2, "path needs n >= 2");
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(n - 1);
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + 1)});
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph cycle_hypergraph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n)});
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph complete_r_uniform(std::size_t n, std::size_t r) {
  require(r >= 2 && r <= n, "complete r-uniform needs 2 <= r <= n");
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = static_cast<Vertex>(i);
  while (true) {
    edges.push_back(cur);
    // next lexicographic r-subset
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph fano_plane() {
  std::vector<std::vector<Vertex>> lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                            {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  return Hypergraph(7, std::move(lines));
}

Graph star_graph(std::size_t n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, static_cast<Vertex>(v));
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  require(n >= 2, "path needs n >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  }
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  require(n >= 2, "complete graph needs n >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);              // outer cycle
    edges.emplace_back(i, i + 5);                    // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);      // inner pentagram
  }
  return Graph(10, edges);
}

Graph cube_graph() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < 8; ++u) {
    for (int b = 0; b < 3; ++b) {
      const Vertex v = u ^ (1u << b);
      if (v > u) edges.emplace_back(u, v);
    }
  }
  return Graph(8, edges);
}

}  // namespace hyperavg
