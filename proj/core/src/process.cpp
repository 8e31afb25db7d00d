#include "hyperavg/process.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperavg/accumulate.hpp"

namespace hyperavg {
namespace {

void check_sizes(std::size_t n, const WeightVector& x) {
  if (x.size() != n) {
    raise(Errc::bad_parameters, "weight vector has " + std::to_string(x.size()) +
                                    " entries for " + std::to_string(n) + " vertices");
  }
}

// Plain left-to-right edge mean; bitwise-reproducible and exactly equal to
// the full-vector mean when the edge covers every vertex.
double edge_mean(const WeightVector& x, std::span<const Vertex> e) {
  double s = 0.0;
  for (Vertex u : e) s += x[u];
  return s / static_cast<double>(e.size());
}

void record_norms(const WeightVector& x, double mean, double& sq, double& d1) {
  NeumaierSum s2, s1;
  for (double v : x) {
    const double d = v - mean;
    s2.add(d * d);
    s1.add(std::abs(d));
  }
  sq = s2.value();
  d1 = s1.value();
}

// ||v - mean(v)||^2 against the state's own mean; exact zero at consensus.
double centered_sq_norm(const WeightVector& v) {
  bool equal = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != v[0]) {
      equal = false;
      break;
    }
  }
  if (equal) return 0.0;
  const double m = plain_sum(v) / static_cast<double>(v.size());
  NeumaierSum s;
  for (double u : v) {
    const double d = u - m;
    s.add(d * d);
  }
  return s.value();
}

}  // namespace

WeightVector mean_vector(const WeightVector& x) {
  if (x.empty()) return {};
  const double m = plain_sum(x) / static_cast<double>(x.size());
  return WeightVector(x.size(), m);
}

void apply_edge_average(WeightVector& x, std::span<const Vertex> e) {
  if (e.empty()) raise(Errc::empty_edge, "cannot average an empty edge");
  for (Vertex u : e) {
    if (u >= x.size()) raise(Errc::vertex_out_of_range, "edge vertex outside weight vector");
  }
  bool equal = true;
  const double first = x[e[0]];
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (x[e[i]] != first) {
      equal = false;
      break;
    }
  }
  if (equal) return;  // mean of equal values is that value; avoid re-rounding
  const double m = edge_mean(x, e);
  for (Vertex u : e) x[u] = m;
}

WeightVector average_step(const WeightVector& x, std::span<const Vertex> e) {
  WeightVector out = x;
  apply_edge_average(out, e);
  return out;
}

std::vector<TrajectoryRecord> simulate_with(const Hypergraph& h, const WeightVector& x,
                                            std::uint64_t steps, Xoshiro256PlusPlus& rng) {
  check_sizes(h.vertex_count(), x);
  if (h.edge_count() == 0) raise(Errc::no_edges, "cannot simulate without edges");
  const double mean = plain_sum(x) / static_cast<double>(x.size());
  WeightVector state = x;
  std::vector<TrajectoryRecord> records;
  records.reserve(steps + 1);
  TrajectoryRecord init{0, 0.0, 0.0, kNoEdge};
  record_norms(state, mean, init.sq_norm2, init.delta1);
  records.push_back(init);
  for (std::uint64_t t = 1; t <= steps; ++t) {
    const std::uint64_t idx = rng.next_below(h.edge_count());
    apply_edge_average(state, h.edge(idx));
    TrajectoryRecord rec{t, 0.0, 0.0, idx};
    record_norms(state, mean, rec.sq_norm2, rec.delta1);
    records.push_back(rec);
  }
  return records;
}

std::vector<TrajectoryRecord> neighborhood_simulate_with(const Graph& g, const WeightVector& x,
                                                         std::uint64_t steps,
                                                         Xoshiro256PlusPlus& rng) {
  check_sizes(g.vertex_count(), x);
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(static_cast<Vertex>(u)) == 0) {
      raise(Errc::isolated_vertex, "vertex " + std::to_string(u) + " is isolated");
    }
  }
  const double mean = plain_sum(x) / static_cast<double>(x.size());
  WeightVector state = x;
  std::vector<TrajectoryRecord> records;
  records.reserve(steps + 1);
  TrajectoryRecord init{0, 0.0, 0.0, kNoEdge};
  record_norms(state, mean, init.sq_norm2, init.delta1);
  records.push_back(init);
  for (std::uint64_t t = 1; t <= steps; ++t) {
    const std::uint64_t u = rng.next_below(g.vertex_count());
    apply_edge_average(state, g.neighbors(static_cast<Vertex>(u)));
    TrajectoryRecord rec{t, 0.0, 0.0, u};
    record_norms(state, mean, rec.sq_norm2, rec.delta1);
    records.push_back(rec);
  }
  return records;
}

std::vector<TrajectoryRecord> simulate(const Hypergraph& h, const WeightVector& x,
                                       const SimConfig& cfg) {
  Xoshiro256PlusPlus rng = stream_for_trial(cfg.seed, 0);
  return simulate_with(h, x, cfg.steps, rng);
}

std::vector<TrajectoryRecord> neighborhood_simulate(const Graph& g, const WeightVector& x,
                                                    const SimConfig& cfg) {
  Xoshiro256PlusPlus rng = stream_for_trial(cfg.seed, 0);
  return neighborhood_simulate_with(g, x, cfg.steps, rng);
}

void advance(const Hypergraph& h, WeightVector& x, std::uint64_t steps, Xoshiro256PlusPlus& rng) {
  check_sizes(h.vertex_count(), x);
  if (h.edge_count() == 0) raise(Errc::no_edges, "cannot simulate without edges");
  for (std::uint64_t t = 0; t < steps; ++t) {
    apply_edge_average(x, h.edge(rng.next_below(h.edge_count())));
  }
}

void advance_neighborhood(const Graph& g, WeightVector& x, std::uint64_t steps,
                          Xoshiro256PlusPlus& rng) {
  check_sizes(g.vertex_count(), x);
  for (std::uint64_t t = 0; t < steps; ++t) {
    const std::uint64_t u = rng.next_below(g.vertex_count());
    auto nb = g.neighbors(static_cast<Vertex>(u));
    if (nb.empty()) raise(Errc::isolated_vertex, "vertex " + std::to_string(u) + " is isolated");
    apply_edge_average(x, nb);
  }
}

double one_step_expected_drop(const Hypergraph& h, const WeightVector& x) {
  check_sizes(h.vertex_count(), x);
  if (h.edge_count() == 0) raise(Errc::no_edges, "expected drop needs at least one edge");
  NeumaierSum total;
  for (const auto& e : h.edges()) {
    NeumaierSum pair_sum;
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        const double d = x[e[a]] - x[e[b]];
        pair_sum.add(d * d);
      }
    }
    total.add(pair_sum.value() / static_cast<double>(e.size()));
  }
  return total.value() / static_cast<double>(h.edge_count());
}

namespace {

std::uint64_t sequence_count(std::uint64_t m, std::uint64_t t, std::uint64_t budget) {
  std::uint64_t leaves = 1;
  for (std::uint64_t i = 0; i < t; ++i) {
    if (leaves > budget / m) {
      raise(Errc::budget_exceeded, "|E|^t exceeds enumeration budget of " +
                                       std::to_string(budget) + " sequences");
    }
    leaves *= m;
  }
  return leaves;
}

void enumerate_double(const Hypergraph& h, WeightVector& state, double mean, std::uint64_t depth,
                      NeumaierSum& acc) {
  if (depth == 0) {
    NeumaierSum s;
    for (double v : state) {
      const double d = v - mean;
      s.add(d * d);
    }
    acc.add(s.value());
    return;
  }
  std::vector<double> saved;
  for (const auto& e : h.edges()) {
    saved.clear();
    saved.reserve(e.size());
    for (Vertex u : e) saved.push_back(state[u]);
    apply_edge_average(state, e);
    enumerate_double(h, state, mean, depth - 1, acc);
    for (std::size_t i = 0; i < e.size(); ++i) state[e[i]] = saved[i];
  }
}

void enumerate_rational(const Hypergraph& h, RationalVector& state, const Rational& mean,
                        std::uint64_t depth, Rational& acc) {
  if (depth == 0) {
    Rational s = 0;
    for (const Rational& v : state) {
      const Rational d = v - mean;
      s += d * d;
    }
    acc += s;
    return;
  }
  std::vector<Rational> saved;
  for (const auto& e : h.edges()) {
    saved.clear();
    saved.reserve(e.size());
    Rational sum = 0;
    for (Vertex u : e) {
      saved.push_back(state[u]);
      sum += state[u];
    }
    const Rational m = sum / static_cast<int>(e.size());
    for (Vertex u : e) state[u] = m;
    enumerate_rational(h, state, mean, depth - 1, acc);
    for (std::size_t i = 0; i < e.size(); ++i) state[e[i]] = saved[i];
  }
}

}  // namespace

double exact_expected_sq_norm(const Hypergraph& h, const WeightVector& x, std::uint64_t t,
                              std::uint64_t budget) {
  check_sizes(h.vertex_count(), x);
  if (h.edge_count() == 0) raise(Errc::no_edges, "enumeration needs at least one edge");
  const std::uint64_t leaves = sequence_count(h.edge_count(), t, budget);
  const double mean = plain_sum(x) / static_cast<double>(x.size());
  WeightVector state = x;
  NeumaierSum acc;
  enumerate_double(h, state, mean, t, acc);
  return acc.value() / static_cast<double>(leaves);
}

Rational exact_expected_sq_norm_rational(const Hypergraph& h, const RationalVector& x,
                                         std::uint64_t t, std::uint64_t budget) {
  if (x.size() != h.vertex_count()) raise(Errc::bad_parameters, "weight vector size mismatch");
  if (h.edge_count() == 0) raise(Errc::no_edges, "enumeration needs at least one edge");
  sequence_count(h.edge_count(), t, budget);
  Rational mean = 0;
  for (const Rational& v : x) mean += v;
  mean /= static_cast<int>(x.size());
  RationalVector state = x;
  Rational acc = 0;
  enumerate_rational(h, state, mean, t, acc);
  BigInt denom = 1;
  for (std::uint64_t i = 0; i < t; ++i) denom *= h.edge_count();
  return acc / Rational(denom);
}

std::vector<MartingaleRecord> martingale_trace(const Hypergraph& h, const WeightVector& x,
                                               const SimConfig& cfg) {
  check_sizes(h.vertex_count(), x);
  const auto r = uniform_edge_size(h);
  if (!r) raise(Errc::not_uniform, "martingale needs an r-uniform hypergraph");
  const auto d = is_codegree_regular(h);
  if (!d) raise(Errc::not_codegree_regular, "martingale needs a codegree-regular hypergraph");
  const std::size_t n = h.vertex_count();
  if (*r == n) {
    raise(Errc::degenerate_rate, "r = n gives rho = 0; the rescaled process is undefined");
  }
  const double rho =
      1.0 - static_cast<double>(*r - 1) / static_cast<double>(n - 1);

  // Center once; for exactly mean-zero input this is a bitwise no-op.
  const double mean0 = plain_sum(x) / static_cast<double>(n);
  WeightVector state = x;
  for (double& v : state) v -= mean0;

  Xoshiro256PlusPlus rng = stream_for_trial(cfg.seed, 0);
  std::vector<MartingaleRecord> records;
  records.reserve(cfg.steps + 1);
  records.push_back({0, centered_sq_norm(state), 0.0});
  double inv_rho_pow = 1.0;
  for (std::uint64_t t = 1; t <= cfg.steps; ++t) {
    const double sq_prev = centered_sq_norm(state);
    double residual = 0.0;
    if (sq_prev > 0.0) {
      const double drop = one_step_expected_drop(h, state);
      residual = (1.0 - drop / sq_prev) / rho - 1.0;
    }
    apply_edge_average(state, h.edge(rng.next_below(h.edge_count())));
    inv_rho_pow /= rho;
    records.push_back({t, inv_rho_pow * centered_sq_norm(state), residual});
  }
  return records;
}

}  // namespace hyperavg
