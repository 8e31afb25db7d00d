#include "hyperavg/matrix.hpp"

#include <cmath>
#include <string>

namespace hyperavg {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) raise(Errc::overflow, "integer matrix entry overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) raise(Errc::overflow, "integer matrix entry overflow");
  return r;
}

}  // namespace

void IntSymmetricMatrix::add(std::size_t i, std::size_t j, std::int64_t v) {
  const std::int64_t r = checked_add(a_[i * n_ + j], v);
  a_[i * n_ + j] = r;
  a_[j * n_ + i] = r;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
  if (!std::isfinite(v)) raise(Errc::bad_parameters, "non-finite matrix entry");
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

SymmetricMatrix to_double(const IntSymmetricMatrix& m) {
  const std::size_t n = m.size();
  SymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.set(i, j, static_cast<double>(m.at(i, j)));
  }
  return out;
}

IntSymmetricMatrix codegree_laplacian_int(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  if (n < 1) raise(Errc::too_few_vertices, "codegree Laplacian needs n >= 1");
  IntSymmetricMatrix l(n);
  for (const auto& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        l.add(e[a], e[b], -1);
        l.add(e[a], e[a], 1);
        l.add(e[b], e[b], 1);
      }
    }
  }
  return l;
}

IntSymmetricMatrix adjacency_matrix_int(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IntSymmetricMatrix a(n);
  for (const auto& [u, v] : g.edge_pairs()) a.set(u, v, 1);
  return a;
}

IntSymmetricMatrix graph_laplacian_int(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IntSymmetricMatrix l(n);
  for (const auto& [u, v] : g.edge_pairs()) {
    l.set(u, v, -1);
    l.add(u, u, 1);
    l.add(v, v, 1);
  }
  return l;
}

IntSymmetricMatrix square_int(const IntSymmetricMatrix& m) {
  const std::size_t n = m.size();
  IntSymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc = checked_add(acc, checked_mul(m.at(i, k), m.at(k, j)));
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

}  // namespace hyperavg
