#pragma once

#include <cstdint>
#include <vector>

#include "hyperavg/hypergraph.hpp"
#include "hyperavg/matrix.hpp"

namespace hyperavg {

struct Spectrum {
  std::vector<double> eigenvalues;  // sorted ascending
  double residual = 0.0;            // max |off-diagonal| at termination
};

SymmetricMatrix codegree_laplacian(const Hypergraph& h);
SymmetricMatrix adjacency_matrix(const Graph& g);
SymmetricMatrix graph_laplacian(const Graph& g);

// Cyclic Jacobi; iterates full sweeps until max |off-diagonal| < tol, with a
// hard sweep cap. Deterministic for fixed input.
Spectrum eigenvalues_symmetric(const SymmetricMatrix& m, double tol = 1e-12);

// Second-smallest eigenvalue of the codegree Laplacian. Cross-checks the
// spectral connectivity verdict (lambda1 above/below a threshold relative to
// trace(L)/n) against union-find connectivity, and requires |lambda0| < tol;
// disagreement is a hard error, never silently patched.
double lambda1(const Hypergraph& h, double tol = 1e-9);

// x^T L x / x^T x computed as the codegree-weighted sum of squared
// differences (never forms the matrix).
double rayleigh_quotient(const Hypergraph& h, const std::vector<double>& x);

// rho = 1 - lambda1/(r |E|) where r is the maximum edge size. The decay bound
// E||A^t x - xbar||^2 <= rho^t ||x - xbar||^2 requires 1/|e| >= 1/r for every
// edge, i.e. r must dominate all edge sizes; the minimum edge size admits
// counterexamples (see tests), so the maximum is used.
double decay_rate_bound(const Hypergraph& h);

// Neighborhood-process rate 1 - lambda'(2d - lambda')/(dn) for d-regular G,
// lambda' = min{lambda1(G), 2d - lambda_{n-1}(G)}. Verifies the exact integer
// identity L(H_G) = d^2 I - A(G)^2 before any floating-point step.
double neighborhood_rate(const Graph& g);

// (A^k)_{u,v} via exact arbitrary-precision matrix powers; errors on results
// that do not fit 64 bits.
std::uint64_t walk_count(const Graph& g, std::uint64_t k, Vertex u, Vertex v);

}  // namespace hyperavg
