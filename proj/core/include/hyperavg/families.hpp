#pragma once

#include <cstddef>

#include "hyperavg/hypergraph.hpp"

namespace hyperavg {

// Star K_{1,n-1}: center 0, leaves 1..n-1. Requires n >= 2.
Hypergraph star_hypergraph(std::size_t n);
// Path 0-1-...-(n-1). Requires n >= 2.
Hypergraph path_hypergraph(std::size_t n);
// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
Hypergraph cycle_hypergraph(std::size_t n);
// All C(n,r) r-subsets of {0,...,n-1}. Requires 2 <= r <= n.
Hypergraph complete_r_uniform(std::size_t n, std::size_t r);
// The seven lines of the Fano plane on vertices 0..6.
Hypergraph fano_plane();

// Graph counterparts (for neighborhood dynamics and spectral identities).
Graph star_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph petersen_graph();
Graph cube_graph();  // Q_3, the 3-dimensional hypercube

}  // namespace hyperavg
