#include "hyperavg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperavg/accumulate.hpp"
#include "hyperavg/rational.hpp"

namespace hyperavg {
namespace {

double max_offdiag(const std::vector<double>& a, std::size_t n) {
  double off = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p * n + q]));
  }
  return off;
}

}  // namespace

SymmetricMatrix codegree_laplacian(const Hypergraph& h) {
  return to_double(codegree_laplacian_int(h));
}

SymmetricMatrix adjacency_matrix(const Graph& g) { return to_double(adjacency_matrix_int(g)); }

SymmetricMatrix graph_laplacian(const Graph& g) { return to_double(graph_laplacian_int(g)); }

Spectrum eigenvalues_symmetric(const SymmetricMatrix& m, double tol) {
  if (!(tol > 0.0)) raise(Errc::bad_parameters, "tolerance must be positive");
  const std::size_t n = m.size();
  std::vector<double> a = m.data();
  constexpr int kSweepCap = 100;
  double off = max_offdiag(a, n);
  for (int sweep = 0; sweep < kSweepCap && off >= tol; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);  // avoid theta^2 overflow; exact enough here
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          a[i * n + p] = a[p * n + i] = c * aip - s * aiq;
          a[i * n + q] = a[q * n + i] = s * aip + c * aiq;
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
      }
    }
    off = max_offdiag(a, n);
  }
  if (off >= tol) {
    raise(Errc::no_convergence,
          "Jacobi sweep cap hit with off-diagonal residual " + std::to_string(off));
  }
  Spectrum s;
  s.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.eigenvalues[i] = a[i * n + i];
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  s.residual = off;
  return s;
}

double lambda1(const Hypergraph& h, double tol) {
  const std::size_t n = h.vertex_count();
  if (n < 2) raise(Errc::too_few_vertices, "lambda1 needs n >= 2");
  const IntSymmetricMatrix li = codegree_laplacian_int(h);
  std::int64_t trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += li.at(i, i);
  const Spectrum s = eigenvalues_symmetric(to_double(li), 1e-12);
  const double l0 = s.eigenvalues[0];
  const double l1 = s.eigenvalues[1];
  if (std::abs(l0) >= tol) {
    raise(Errc::spectral_connectivity_mismatch,
          "smallest eigenvalue " + std::to_string(l0) + " not numerically zero");
  }
  const double threshold = 1e-8 * (static_cast<double>(trace) / static_cast<double>(n));
  const bool spectral_connected = l1 > threshold;
  if (spectral_connected != is_connected(h)) {
    raise(Errc::spectral_connectivity_mismatch,
          "lambda1 = " + std::to_string(l1) + " (threshold " + std::to_string(threshold) +
              ") contradicts combinatorial connectivity");
  }
  return l1;
}

double rayleigh_quotient(const Hypergraph& h, const std::vector<double>& x) {
  const std::size_t n = h.vertex_count();
  if (x.size() != n) raise(Errc::bad_parameters, "weight vector size mismatch");
  NeumaierSum den;
  bool all_zero = true;
  for (double v : x) {
    if (v != 0.0) all_zero = false;
    den.add(v * v);
  }
  if (all_zero) raise(Errc::zero_vector, "Rayleigh quotient of the zero vector");
  NeumaierSum num;
  for (const auto& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        const double d = x[e[a]] - x[e[b]];
        num.add(d * d);
      }
    }
  }
  return num.value() / den.value();
}

double decay_rate_bound(const Hypergraph& h) {
  if (h.edge_count() == 0) raise(Errc::no_edges, "decay rate needs at least one edge");
  if (!is_connected(h)) raise(Errc::disconnected, "decay rate defined for connected hypergraphs");
  const std::size_t r = max_edge_size(h);
  const double l1 = lambda1(h);
  return 1.0 - l1 / (static_cast<double>(r) * static_cast<double>(h.edge_count()));
}

double neighborhood_rate(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto deg = g.regular_degree();
  if (!deg) raise(Errc::not_regular, "neighborhood rate needs a regular graph");
  const std::int64_t d = static_cast<std::int64_t>(*deg);
  if (d == 0) raise(Errc::isolated_vertex, "neighborhood rate needs degree >= 1");

  // Exact integer identity L(H_G) = d^2 I - A(G)^2, checked before any
  // floating-point work.
  const IntSymmetricMatrix lhg = codegree_laplacian_int(neighborhood_hypergraph(g));
  const IntSymmetricMatrix a2 = square_int(adjacency_matrix_int(g));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::int64_t expect = (i == j ? d * d : 0) - a2.at(i, j);
      if (lhg.at(i, j) != expect) {
        raise(Errc::spectral_connectivity_mismatch,
              "neighborhood Laplacian identity violated at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
      }
    }
  }

  const Spectrum s = eigenvalues_symmetric(graph_laplacian(g), 1e-12);
  const double l1 = s.eigenvalues[1];
  const double lmax = s.eigenvalues[n - 1];
  const double dd = static_cast<double>(d);
  const double lp = std::min(l1, 2.0 * dd - lmax);
  const double gap = lp * (2.0 * dd - lp);
  const double degenerate_tol = 1e-8 * std::max(1.0, dd * dd);
  if (gap <= degenerate_tol) {
    raise(Errc::degenerate_rate,
          "lambda'(2d - lambda') = " + std::to_string(gap) +
              " vanishes (disconnected or bipartite graph)");
  }
  return 1.0 - gap / (dd * static_cast<double>(n));
}

std::uint64_t walk_count(const Graph& g, std::uint64_t k, Vertex u, Vertex v) {
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) raise(Errc::vertex_out_of_range, "walk endpoints out of range");
  // pow = A^k row u, computed as repeated vector-matrix products in exact
  // arbitrary-precision arithmetic.
  std::vector<BigInt> row(n, 0);
  row[u] = 1;
  for (std::uint64_t step = 0; step < k; ++step) {
    std::vector<BigInt> next(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
      if (row[w] == 0) continue;
      for (Vertex nb : g.neighbors(static_cast<Vertex>(w))) next[nb] += row[w];
    }
    row.swap(next);
  }
  const BigInt result = row[v];
  if (result > std::numeric_limits<std::uint64_t>::max()) {
    raise(Errc::overflow, "walk count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace hyperavg
