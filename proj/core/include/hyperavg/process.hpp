#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperavg/hypergraph.hpp"
#include "hyperavg/rational.hpp"
#include "hyperavg/rng.hpp"

namespace hyperavg {

using WeightVector = std::vector<double>;

struct SimConfig {
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  std::uint64_t trials = 1;
};

inline constexpr std::uint64_t kNoEdge = ~std::uint64_t{0};

struct TrajectoryRecord {
  std::uint64_t step = 0;
  double sq_norm2 = 0.0;  // ||x^(t) - xbar||_2^2 against the conserved initial mean
  double delta1 = 0.0;    // ||x^(t) - xbar||_1 against the conserved initial mean
  std::uint64_t chosen_edge = kNoEdge;  // kNoEdge for the initial record
};

struct MartingaleRecord {
  std::uint64_t step = 0;
  double s_sq_norm = 0.0;  // rho^{-t} ||x^(t) - mean||_2^2
  double residual = 0.0;   // relative one-step conditional-expectation defect
};

WeightVector mean_vector(const WeightVector& x);

// Non-mutating single averaging step; e must index into x.
WeightVector average_step(const WeightVector& x, std::span<const Vertex> e);
// In-place variant; an edge whose coordinates are already all equal is an
// exact no-op (recomputing the mean of equal values could round).
void apply_edge_average(WeightVector& x, std::span<const Vertex> e);

// One trajectory: records for steps 0..cfg.steps, edge chosen uniformly from
// the edge list (multiplicity-weighted) via the trial-0 stream of cfg.seed.
std::vector<TrajectoryRecord> simulate(const Hypergraph& h, const WeightVector& x,
                                       const SimConfig& cfg);
// Neighborhood variant: per step a uniform vertex u; N_G(u) is averaged.
// chosen_edge records u, matching the edge indexing of the neighborhood
// hypergraph, so aligned seeds yield bitwise-identical trajectories.
std::vector<TrajectoryRecord> neighborhood_simulate(const Graph& g, const WeightVector& x,
                                                    const SimConfig& cfg);

// As above but drawing from a caller-provided stream (per-trial aggregation).
std::vector<TrajectoryRecord> simulate_with(const Hypergraph& h, const WeightVector& x,
                                            std::uint64_t steps, Xoshiro256PlusPlus& rng);
std::vector<TrajectoryRecord> neighborhood_simulate_with(const Graph& g, const WeightVector& x,
                                                         std::uint64_t steps,
                                                         Xoshiro256PlusPlus& rng);

// Lean trajectory advance without per-step records; consumes the RNG exactly
// like simulate, so final states agree bitwise.
void advance(const Hypergraph& h, WeightVector& x, std::uint64_t steps, Xoshiro256PlusPlus& rng);
void advance_neighborhood(const Graph& g, WeightVector& x, std::uint64_t steps,
                          Xoshiro256PlusPlus& rng);

// Exact E[||x||^2 - ||Ax||^2] for one uniform step:
// (1/|E|) sum_e (1/|e|) sum_{u<v in e} (x_u - x_v)^2. The identity is
// edge-local, so no mean-zero hypothesis is needed.
double one_step_expected_drop(const Hypergraph& h, const WeightVector& x);

// Exact E[||A^t x - xbar||_2^2] by depth-first enumeration of all |E|^t edge
// sequences; errors when |E|^t exceeds the leaf budget.
double exact_expected_sq_norm(const Hypergraph& h, const WeightVector& x, std::uint64_t t,
                              std::uint64_t budget = 10'000'000);
// Same enumeration in exact rational arithmetic (test oracle for the
// floating-point path and for theorem equalities).
Rational exact_expected_sq_norm_rational(const Hypergraph& h, const RationalVector& x,
                                         std::uint64_t t, std::uint64_t budget = 10'000'000);

// ||S^t||^2 = rho^{-t} ||x^(t) - mean||^2 with rho = 1 - (r-1)/(n-1) along one
// trajectory, for r-uniform codegree-regular H. The input is centered once;
// each step's norm is taken against the state's own mean (the mean is
// conserved, and recomputing it keeps the residual from measuring accumulated
// rounding drift instead of the martingale identity). A state at exact
// consensus reports s_sq_norm = 0 and residual = 0 (the conditional
// expectation degenerates there).
std::vector<MartingaleRecord> martingale_trace(const Hypergraph& h, const WeightVector& x,
                                               const SimConfig& cfg);

}  // namespace hyperavg
