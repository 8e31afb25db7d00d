#include "hyperavg/p3.hpp"

#include <cmath>

#include "hyperavg/accumulate.hpp"
#include "hyperavg/families.hpp"

namespace hyperavg {
namespace {

Rational pow2(std::uint64_t k) {
  BigInt v = 1;
  v <<= k;
  return Rational(v);
}

}  // namespace

WeightVector p3_initial(P3Which which) {
  if (which == P3Which::prop5) return {1.0, -0.5, -0.5};
  return {1.0, -1.0, 0.0};
}

P3Exact p3_exact(std::uint64_t t, P3Which which) {
  if (t < 1) raise(Errc::bad_parameters, "P3 statements need t >= 1");
  P3Exact out;
  out.t = t;
  if (which == P3Which::prop5) {
    // ||A^t x||^2 = (3/2) 4^{-D} >= 2^{-t}  <=>  t - 2D >= log2(2/3)  <=>
    // D <= floor(t/2) since t - 2D is an integer.
    BigInt tail = 0;
    for (std::uint64_t i = 0; i <= t / 2; ++i) tail += binomial(t, i);
    out.prob_event = Rational(tail) / pow2(t);
    out.prob_zero = 0;
    out.threshold = 1 / pow2(t);
  } else {
    // First draw: {0,1} reaches consensus forever; {1,2} enters the positive
    // branch whose minimum over the remaining t-1 steps is (3/2) 4^{-(t-1)}.
    out.prob_event = Rational(1, 2);
    out.prob_zero = Rational(1, 2);
    out.threshold = Rational(3) / pow2(2 * t - 1);
  }
  return out;
}

P3Mc p3_mc(std::uint64_t t, P3Which which, std::uint64_t trials, std::uint64_t seed) {
  if (t < 1) raise(Errc::bad_parameters, "P3 statements need t >= 1");
  if (trials < 1) raise(Errc::bad_parameters, "need at least one trial");
  const Hypergraph p3 = path_hypergraph(3);
  const WeightVector x0 = p3_initial(which);
  const double threshold = to_double(p3_exact(t, which).threshold);
  std::uint64_t hits_event = 0;
  std::uint64_t hits_zero = 0;
  for (std::uint64_t k = 0; k < trials; ++k) {
    Xoshiro256PlusPlus rng = stream_for_trial(seed, k);
    WeightVector x = x0;
    advance(p3, x, t, rng);
    // Initial vectors are exactly mean-zero, and every state is dyadic, so
    // the squared norm and both event tests are exact.
    double sq = 0.0;
    for (double v : x) sq += v * v;
    if (sq == 0.0) ++hits_zero;
    if (sq >= threshold) ++hits_event;
  }
  P3Mc out;
  out.t = t;
  out.trials = trials;
  const double nt = static_cast<double>(trials);
  out.freq_event = static_cast<double>(hits_event) / nt;
  out.freq_zero = static_cast<double>(hits_zero) / nt;
  out.se_event = std::sqrt(out.freq_event * (1.0 - out.freq_event) / nt);
  out.se_zero = std::sqrt(out.freq_zero * (1.0 - out.freq_zero) / nt);
  return out;
}

}  // namespace hyperavg
