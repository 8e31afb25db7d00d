#include "oracles.hpp"

#include <algorithm>
#include <queue>

namespace oracle {

using hyperavg::Graph;
using hyperavg::Hypergraph;
using hyperavg::IntSymmetricMatrix;
using hyperavg::SymmetricMatrix;
using hyperavg::Vertex;
using hyperavg::WeightVector;
using hyperavg::Xoshiro256PlusPlus;

std::vector<BigInt> char_poly(const IntSymmetricMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> A(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i * n + j] = a.at(i, j);

  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  std::vector<BigInt> M = A;  // M_1 = A
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      // M_k = A (M_{k-1} + c_{n-k+1} I)
      std::vector<BigInt> shifted = M;
      for (std::size_t i = 0; i < n; ++i) shifted[i * n + i] += c[n - k + 1];
      std::vector<BigInt> next(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          BigInt acc = 0;
          for (std::size_t l = 0; l < n; ++l) acc += A[i * n + l] * shifted[l * n + j];
          next[i * n + j] = acc;
        }
      }
      M = std::move(next);
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += M[i * n + i];
    c[n - k] = -trace / static_cast<long long>(k);  // exact by construction
  }
  return c;
}

Rational eval_poly(const std::vector<BigInt>& c, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + Rational(c[k]);
  return acc;
}

namespace {
int sign_of(const Rational& q) { return q == 0 ? 0 : (q < 0 ? -1 : 1); }
}  // namespace

bool brackets_root(const std::vector<BigInt>& c, double lambda, double delta) {
  const Rational lo = Rational(lambda) - Rational(delta);
  const Rational hi = Rational(lambda) + Rational(delta);
  const int a = sign_of(eval_poly(c, lo));
  const int b = sign_of(eval_poly(c, hi));
  return a == 0 || b == 0 || a != b;
}

SymmetricMatrix householder_conjugate(const std::vector<double>& d) {
  const std::size_t n = d.size();
  SymmetricMatrix m(n);
  const double s = 2.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double qik = (i == k ? 1.0 : 0.0) - s;
        const double qjk = (j == k ? 1.0 : 0.0) - s;
        acc += qik * d[k] * qjk;
      }
      m.set(i, j, acc);
    }
  }
  return m;
}

bool pairs_connected(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  if (n <= 1) return true;
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : pairs) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == n;
}

Hypergraph random_hypergraph(Xoshiro256PlusPlus& rng, std::size_t n, std::size_t m,
                             std::size_t max_size) {
  std::vector<std::vector<Vertex>> edges(m);
  std::vector<Vertex> pool(n);
  for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<Vertex>(v);
  const std::size_t cap = std::min(max_size, n);
  for (auto& e : edges) {
    const std::size_t size = 2 + static_cast<std::size_t>(rng.next_below(cap - 1));
    // partial Fisher-Yates: the first `size` entries become the edge
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.next_below(n - i));
      std::swap(pool[i], pool[j]);
    }
    e.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_connected_hypergraph(Xoshiro256PlusPlus& rng, std::size_t n_max,
                                       std::size_t m_max) {
  for (;;) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next_below(n_max - 1));
    const std::size_t mlo = std::min(m_max, n);
    const std::size_t m = mlo + static_cast<std::size_t>(rng.next_below(m_max - mlo + 1));
    auto h = random_hypergraph(rng, n, std::min(m, m_max), 4);
    if (hyperavg::is_connected(h)) return h;
  }
}

Hypergraph random_disconnected_hypergraph(Xoshiro256PlusPlus& rng, std::size_t n_max) {
  for (;;) {
    const std::size_t n = 4 + static_cast<std::size_t>(rng.next_below(n_max - 3));
    const std::size_t m = 1 + static_cast<std::size_t>(rng.next_below(2));
    auto h = random_hypergraph(rng, n, m, 3);
    if (!hyperavg::is_connected(h)) return h;
  }
}

Graph random_connected_graph(Xoshiro256PlusPlus& rng, std::size_t n_max) {
  for (;;) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next_below(n_max - 1));
    std::vector<std::pair<Vertex, Vertex>> all;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::vector<std::pair<Vertex, Vertex>> chosen;
    for (const auto& p : all) {
      if (rng.next_below(2) == 0) chosen.push_back(p);
    }
    if (chosen.empty()) continue;
    if (!pairs_connected(n, chosen)) continue;
    return Graph(n, chosen);
  }
}

WeightVector random_vector(Xoshiro256PlusPlus& rng, std::size_t n, double scale) {
  WeightVector x(n);
  for (double& v : x) v = scale * rng.next_symmetric();
  return x;
}

}  // namespace oracle
