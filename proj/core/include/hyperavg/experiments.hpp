#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperavg/hypergraph.hpp"
#include "hyperavg/p3.hpp"
#include "hyperavg/process.hpp"

namespace hyperavg {

enum class Relation { le, eq, ge };
const char* relation_symbol(Relation r);

struct VerificationReport {
  std::string claim;
  double measured = 0.0;
  double reference = 0.0;
  Relation relation = Relation::eq;
  double tolerance = 0.0;
  bool verdict = false;
  double stderr_measured = 0.0;  // 0 in exact modes
  std::string metadata;
};

// Pure verdict rule: eq -> |m - r| <= tol * max(1, |r|); le -> m <= r + tol;
// ge -> m >= r - tol.
bool verdict_of(double measured, double reference, Relation relation, double tolerance);

// Builds a report; statistical modes widen the tolerance to
// base_tolerance + se_mult * se, with se recorded separately.
VerificationReport make_report(std::string claim, double measured, double reference,
                               Relation relation, double base_tolerance, double se, double se_mult,
                               std::string metadata);

struct McStats {
  std::uint64_t trials = 0;
  double mean_sq = 0.0, se_sq = 0.0;  // ||x^t - xbar||_2^2
  double mean_l2 = 0.0, se_l2 = 0.0;  // ||x^t - xbar||_2
  double mean_l1 = 0.0, se_l1 = 0.0;  // ||x^t - xbar||_1
};

// Monte-Carlo estimates of the final-state distances after `steps` steps;
// trial k draws from the k-th stream of `seed`, so results are independent of
// scheduling and identical to sequential execution.
McStats mc_final_stats(const Hypergraph& h, const WeightVector& x, std::uint64_t steps,
                       std::uint64_t trials, std::uint64_t seed);
McStats mc_final_stats_neighborhood(const Graph& g, const WeightVector& x, std::uint64_t steps,
                                    std::uint64_t trials, std::uint64_t seed);

// Decay bound E||A^t x - xbar||^2 <= rho^t ||x - xbar||^2.
VerificationReport verify_theorem2(const Hypergraph& h, const WeightVector& x, std::uint64_t t,
                                   bool exact, const SimConfig& cfg, double se_mult = 4.0,
                                   std::uint64_t budget = 10'000'000);

struct CorollaryThresholds {
  std::uint64_t t_l2 = 0;
  std::uint64_t t_l1 = 0;
};
// t_l2 = ceil(2c r|E|/lambda1), t_l1 = ceil((ln n + 2c) r|E|/lambda1).
CorollaryThresholds corollary_thresholds(const Hypergraph& h, double c);
// MC companion: at t_l2, E||. ||_2 <= e^{-c}||x - xbar||_2; at t_l1 the same
// bound for E||.||_1.
std::vector<VerificationReport> verify_corollary(const Hypergraph& h, const WeightVector& x,
                                                 double c, const SimConfig& cfg,
                                                 double se_mult = 4.0);

// Equality E||A^t x - xbar||^2 = (1 - (r-1)/(n-1))^t ||x - xbar||^2 on
// codegree-regular r-uniform instances.
VerificationReport verify_theorem3(std::uint64_t n, std::uint64_t r, std::uint64_t t,
                                   const SimConfig& cfg, bool exact, double se_mult = 4.0,
                                   std::uint64_t budget = 10'000'000);
VerificationReport verify_theorem3_on(const Hypergraph& h, const WeightVector& x, std::uint64_t t,
                                      const SimConfig& cfg, bool exact, double se_mult = 4.0,
                                      std::uint64_t budget = 10'000'000);

// Neighborhood-process bound with rate from neighborhood_rate (which proves
// the integer identity L(H_G) = d^2 I - A^2 first).
VerificationReport verify_theorem4(const Graph& g, const WeightVector& x, std::uint64_t t,
                                   const SimConfig& cfg, bool exact, double se_mult = 4.0,
                                   std::uint64_t budget = 10'000'000);

// Exact lower-tail probabilities for t = 1..t_max (tolerance 0), plus MC
// cross-checks at t in {5, 10} when with_mc.
std::vector<VerificationReport> verify_prop5(std::uint64_t t_max, const SimConfig& cfg,
                                             bool with_mc = true, double se_mult = 4.0);
// The (1/2, 1/2) pair, exact and (when with_mc) by simulation.
std::vector<VerificationReport> verify_prop6(std::uint64_t t, const SimConfig& cfg,
                                             bool with_mc = true, double se_mult = 4.0);

struct SeriesRow {
  std::uint64_t t = 0;
  double mean_sq = 0.0, se_sq = 0.0;
  double mean_d1 = 0.0, se_d1 = 0.0;
};

// Per-step means and standard errors over cfg.trials independent trajectories.
std::vector<SeriesRow> aggregate_trajectories(const Hypergraph& h, const WeightVector& x,
                                              const SimConfig& cfg);
std::vector<SeriesRow> aggregate_trajectories_neighborhood(const Graph& g, const WeightVector& x,
                                                           const SimConfig& cfg);

enum class Figure { fs, f1, f2 };
// FS: star with n leaves (n+1 vertices), x = e0 - 1/(n+1), default horizon
// ceil(2 n ln n). F1: path on n vertices, x = e0 - e_{n-1}. F2: path on n
// vertices, x = e0 - 1/n. F1/F2 default horizon n^3. t_max = 0 picks the
// default.
std::vector<SeriesRow> reproduce_figure(Figure which, std::uint64_t n, std::uint64_t t_max,
                                        const SimConfig& cfg);

enum class Conjecture { conj1, conj2 };
struct ProbeRow {
  std::string instance;
  std::uint64_t t = 0;
  double mean_delta1 = 0.0;
  double se_delta1 = 0.0;
  double ell2_initial = 0.0;
  double ratio = 0.0;  // mean_delta1 / ell2_initial; data only, no verdicts
};
std::vector<ProbeRow> conjecture_probe(Conjecture which, std::uint64_t n, const SimConfig& cfg);

// Deterministic pseudo-random weights in [-1, 1] from the dedicated weights
// stream of `seed`.
WeightVector random_weights(std::size_t n, std::uint64_t seed);

}  // namespace hyperavg
