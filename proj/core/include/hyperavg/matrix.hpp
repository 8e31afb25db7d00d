#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperavg/errors.hpp"
#include "hyperavg/hypergraph.hpp"

namespace hyperavg {

// Exact integer symmetric matrix. Laplacians and adjacency powers are
// integer-valued by definition; they are assembled here and converted to
// floating point only at the eigensolver boundary.
class IntSymmetricMatrix {
 public:
  explicit IntSymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }
  void add(std::size_t i, std::size_t j, std::int64_t v);  // overflow-checked

  bool operator==(const IntSymmetricMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> a_;
};

class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v);  // writes both mirror entries
  const std::vector<double>& data() const { return a_; }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

SymmetricMatrix to_double(const IntSymmetricMatrix& m);

// Codegree Laplacian: off-diagonal (u,v) = -d(u,v), diagonal = sum of the
// row's codegrees, so every row sums to zero.
IntSymmetricMatrix codegree_laplacian_int(const Hypergraph& h);
IntSymmetricMatrix adjacency_matrix_int(const Graph& g);
IntSymmetricMatrix graph_laplacian_int(const Graph& g);

// M*M with overflow-checked 64-bit arithmetic.
IntSymmetricMatrix square_int(const IntSymmetricMatrix& m);

}  // namespace hyperavg
