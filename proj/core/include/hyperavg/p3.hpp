#pragma once

#include <cstdint>

#include "hyperavg/process.hpp"
#include "hyperavg/rational.hpp"

namespace hyperavg {

// The two P3 probability statements, driven by the closed-form trajectory
// law: from x = (1, -1/2, -1/2) the squared norm after t steps is
// (3/2) * 4^{-D(t)} where D(t) ~ Binomial(t, 1/2) counts draws of the edge
// {1,2}. From x = (1, -1, 0) the first draw either reaches consensus
// (edge {0,1}) or moves to the (1, -1/2, -1/2) regime (edge {1,2}).
enum class P3Which { prop5, prop6 };

struct P3Exact {
  std::uint64_t t = 0;
  Rational prob_event;  // P[ ||A^t x||^2 >= threshold ]
  Rational prob_zero;   // P[ ||A^t x||^2 == 0 ]
  Rational threshold;   // certified event threshold
};

// Exact rational probabilities. prop5: threshold 2^{-t}; the event is
// equivalent to D(t) <= floor(t/2), so the probability is the lower binomial
// tail and is >= 1/2 for every t. prop6: P[zero] = 1/2 and
// P[ >= (3/2) 4^{-(t-1)} ] = 1/2; the threshold is the minimum of the
// positive branch, certified by the closed form.
P3Exact p3_exact(std::uint64_t t, P3Which which);

struct P3Mc {
  std::uint64_t t = 0;
  std::uint64_t trials = 0;
  double freq_event = 0.0;
  double se_event = 0.0;
  double freq_zero = 0.0;
  double se_zero = 0.0;
};

// Monte-Carlo companion. P3 states are exactly representable dyadic doubles,
// so both events are evaluated exactly per trajectory.
P3Mc p3_mc(std::uint64_t t, P3Which which, std::uint64_t trials, std::uint64_t seed);

// Initial vectors: prop5 -> (1, -1/2, -1/2), prop6 -> (1, -1, 0).
WeightVector p3_initial(P3Which which);

}  // namespace hyperavg
