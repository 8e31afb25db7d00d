#include "hyperavg/experiments.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "hyperavg/accumulate.hpp"
#include "hyperavg/families.hpp"
#include "hyperavg/spectral.hpp"

namespace hyperavg {
namespace {

struct Welford {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
  void add(double v) {
    ++n;
    const double d = v - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (v - mean);
  }
  double se() const {
    if (n < 2) return 0.0;
    return std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
  }
};

double initial_mean(const WeightVector& x) {
  return plain_sum(x) / static_cast<double>(x.size());
}

double sq_about(const WeightVector& x, double mean) {
  NeumaierSum s;
  for (double v : x) {
    const double d = v - mean;
    s.add(d * d);
  }
  return s.value();
}

double l1_about(const WeightVector& x, double mean) {
  NeumaierSum s;
  for (double v : x) s.add(std::abs(v - mean));
  return s.value();
}

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[512];
  vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

}  // namespace

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
  }
  return "?";
}

bool verdict_of(double measured, double reference, Relation relation, double tolerance) {
  switch (relation) {
    case Relation::le: return measured <= reference + tolerance;
    case Relation::eq:
      return std::abs(measured - reference) <= tolerance * std::max(1.0, std::abs(reference));
    case Relation::ge: return measured >= reference - tolerance;
  }
  return false;
}

VerificationReport make_report(std::string claim, double measured, double reference,
                               Relation relation, double base_tolerance, double se, double se_mult,
                               std::string metadata) {
  VerificationReport rep;
  rep.claim = std::move(claim);
  rep.measured = measured;
  rep.reference = reference;
  rep.relation = relation;
  rep.tolerance = base_tolerance + se_mult * se;
  rep.stderr_measured = se;
  rep.metadata = std::move(metadata);
  rep.verdict = verdict_of(measured, reference, relation, rep.tolerance);
  return rep;
}

namespace {

template <typename Step>
McStats mc_stats_impl(const WeightVector& x, std::uint64_t trials, std::uint64_t seed,
                      Step&& run_trial) {
  if (trials < 1) raise(Errc::bad_parameters, "need at least one trial");
  const double mean = initial_mean(x);
  Welford w_sq, w_l2, w_l1;
  WeightVector state;
  for (std::uint64_t k = 0; k < trials; ++k) {
    state = x;
    Xoshiro256PlusPlus rng = stream_for_trial(seed, k);
    run_trial(state, rng);
    const double sq = sq_about(state, mean);
    w_sq.add(sq);
    w_l2.add(std::sqrt(sq));
    w_l1.add(l1_about(state, mean));
  }
  McStats out;
  out.trials = trials;
  out.mean_sq = w_sq.mean;
  out.se_sq = w_sq.se();
  out.mean_l2 = w_l2.mean;
  out.se_l2 = w_l2.se();
  out.mean_l1 = w_l1.mean;
  out.se_l1 = w_l1.se();
  return out;
}

}  // namespace

McStats mc_final_stats(const Hypergraph& h, const WeightVector& x, std::uint64_t steps,
                       std::uint64_t trials, std::uint64_t seed) {
  return mc_stats_impl(x, trials, seed, [&](WeightVector& state, Xoshiro256PlusPlus& rng) {
    advance(h, state, steps, rng);
  });
}

McStats mc_final_stats_neighborhood(const Graph& g, const WeightVector& x, std::uint64_t steps,
                                    std::uint64_t trials, std::uint64_t seed) {
  return mc_stats_impl(x, trials, seed, [&](WeightVector& state, Xoshiro256PlusPlus& rng) {
    advance_neighborhood(g, state, steps, rng);
  });
}

VerificationReport verify_theorem2(const Hypergraph& h, const WeightVector& x, std::uint64_t t,
                                   bool exact, const SimConfig& cfg, double se_mult,
                                   std::uint64_t budget) {
  const double rho = decay_rate_bound(h);
  const double sq0 = sq_about(x, initial_mean(x));
  const double reference = std::pow(rho, static_cast<double>(t)) * sq0;
  if (exact) {
    const double measured = exact_expected_sq_norm(h, x, t, budget);
    return make_report("theorem2", measured, reference, Relation::le, 1e-10, 0.0, 0.0,
                       fmt("mode=exact n=%zu m=%zu t=%llu rho=%.17g", h.vertex_count(),
                           h.edge_count(), static_cast<unsigned long long>(t), rho));
  }
  const McStats st = mc_final_stats(h, x, t, cfg.trials, cfg.seed);
  return make_report("theorem2", st.mean_sq, reference, Relation::le, 0.0, st.se_sq, se_mult,
                     fmt("mode=mc n=%zu m=%zu t=%llu rho=%.17g trials=%llu seed=%llu",
                         h.vertex_count(), h.edge_count(), static_cast<unsigned long long>(t), rho,
                         static_cast<unsigned long long>(cfg.trials),
                         static_cast<unsigned long long>(cfg.seed)));
}

CorollaryThresholds corollary_thresholds(const Hypergraph& h, double c) {
  if (!(c > 0.0)) raise(Errc::bad_parameters, "corollary constant c must be positive");
  if (!is_connected(h)) raise(Errc::disconnected, "corollary thresholds need a connected host");
  const double l1 = lambda1(h);
  const double re = static_cast<double>(max_edge_size(h)) * static_cast<double>(h.edge_count());
  const double n = static_cast<double>(h.vertex_count());
  CorollaryThresholds out;
  out.t_l2 = static_cast<std::uint64_t>(std::ceil(2.0 * c * re / l1));
  out.t_l1 = static_cast<std::uint64_t>(std::ceil((std::log(n) + 2.0 * c) * re / l1));
  return out;
}

std::vector<VerificationReport> verify_corollary(const Hypergraph& h, const WeightVector& x,
                                                 double c, const SimConfig& cfg, double se_mult) {
  const CorollaryThresholds th = corollary_thresholds(h, c);
  const double l2_0 = std::sqrt(sq_about(x, initial_mean(x)));
  const double bound = std::exp(-c) * l2_0;
  std::vector<VerificationReport> out;
  const McStats s2 = mc_final_stats(h, x, th.t_l2, cfg.trials, cfg.seed);
  out.push_back(make_report(
      "corollary-l2", s2.mean_l2, bound, Relation::le, 0.0, s2.se_l2, se_mult,
      fmt("mode=mc c=%.17g t=%llu trials=%llu seed=%llu n=%zu m=%zu", c,
          static_cast<unsigned long long>(th.t_l2), static_cast<unsigned long long>(cfg.trials),
          static_cast<unsigned long long>(cfg.seed), h.vertex_count(), h.edge_count())));
  const McStats s1 = mc_final_stats(h, x, th.t_l1, cfg.trials, cfg.seed);
  out.push_back(make_report(
      "corollary-l1", s1.mean_l1, bound, Relation::le, 0.0, s1.se_l1, se_mult,
      fmt("mode=mc c=%.17g t=%llu trials=%llu seed=%llu n=%zu m=%zu", c,
          static_cast<unsigned long long>(th.t_l1), static_cast<unsigned long long>(cfg.trials),
          static_cast<unsigned long long>(cfg.seed), h.vertex_count(), h.edge_count())));
  return out;
}

VerificationReport verify_theorem3(std::uint64_t n, std::uint64_t r, std::uint64_t t,
                                   const SimConfig& cfg, bool exact, double se_mult,
                                   std::uint64_t budget) {
  const Hypergraph h = complete_r_uniform(n, r);
  const WeightVector x = random_weights(n, cfg.seed);
  return verify_theorem3_on(h, x, t, cfg, exact, se_mult, budget);
}

VerificationReport verify_theorem3_on(const Hypergraph& h, const WeightVector& x, std::uint64_t t,
                                      const SimConfig& cfg, bool exact, double se_mult,
                                      std::uint64_t budget) {
  const auto r = uniform_edge_size(h);
  if (!r) raise(Errc::not_uniform, "equality needs an r-uniform hypergraph");
  const auto d = is_codegree_regular(h);
  if (!d) raise(Errc::not_codegree_regular, "equality needs a codegree-regular hypergraph");
  const std::size_t n = h.vertex_count();
  const double rho = 1.0 - static_cast<double>(*r - 1) / static_cast<double>(n - 1);
  const double sq0 = sq_about(x, initial_mean(x));
  const double reference = std::pow(rho, static_cast<double>(t)) * sq0;
  if (exact) {
    const double measured = exact_expected_sq_norm(h, x, t, budget);
    return make_report("theorem3", measured, reference, Relation::eq, 1e-10, 0.0, 0.0,
                       fmt("mode=exact n=%zu r=%zu d=%llu t=%llu rho=%.17g", n, *r,
                           static_cast<unsigned long long>(*d),
                           static_cast<unsigned long long>(t), rho));
  }
  const McStats st = mc_final_stats(h, x, t, cfg.trials, cfg.seed);
  return make_report("theorem3", st.mean_sq, reference, Relation::eq, 0.0, st.se_sq, se_mult,
                     fmt("mode=mc n=%zu r=%zu d=%llu t=%llu rho=%.17g trials=%llu seed=%llu", n,
                         *r, static_cast<unsigned long long>(*d),
                         static_cast<unsigned long long>(t), rho,
                         static_cast<unsigned long long>(cfg.trials),
                         static_cast<unsigned long long>(cfg.seed)));
}

VerificationReport verify_theorem4(const Graph& g, const WeightVector& x, std::uint64_t t,
                                   const SimConfig& cfg, bool exact, double se_mult,
                                   std::uint64_t budget) {
  const double rate = neighborhood_rate(g);  // proves L(H_G) = d^2 I - A^2 exactly
  const double sq0 = sq_about(x, initial_mean(x));
  const double reference = std::pow(rate, static_cast<double>(t)) * sq0;
  if (exact) {
    const Hypergraph hg = neighborhood_hypergraph(g);
    const double measured = exact_expected_sq_norm(hg, x, t, budget);
    return make_report("theorem4", measured, reference, Relation::le, 1e-10, 0.0, 0.0,
                       fmt("mode=exact n=%zu t=%llu rate=%.17g identity=exact", g.vertex_count(),
                           static_cast<unsigned long long>(t), rate));
  }
  const McStats st = mc_final_stats_neighborhood(g, x, t, cfg.trials, cfg.seed);
  return make_report("theorem4", st.mean_sq, reference, Relation::le, 0.0, st.se_sq, se_mult,
                     fmt("mode=mc n=%zu t=%llu rate=%.17g identity=exact trials=%llu seed=%llu",
                         g.vertex_count(), static_cast<unsigned long long>(t), rate,
                         static_cast<unsigned long long>(cfg.trials),
                         static_cast<unsigned long long>(cfg.seed)));
}

std::vector<VerificationReport> verify_prop5(std::uint64_t t_max, const SimConfig& cfg,
                                             bool with_mc, double se_mult) {
  if (t_max < 1) raise(Errc::bad_parameters, "need t_max >= 1");
  std::vector<VerificationReport> out;
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    const P3Exact ex = p3_exact(t, P3Which::prop5);
    out.push_back(make_report(
        fmt("prop5-exact-t%llu", static_cast<unsigned long long>(t)), to_double(ex.prob_event),
        0.5, Relation::ge, 0.0, 0.0, 0.0,
        fmt("mode=exact event=sqnorm>=2^-%llu prob=%s", static_cast<unsigned long long>(t),
            ex.prob_event.str().c_str())));
  }
  if (with_mc) {
    for (std::uint64_t t : {std::uint64_t{5}, std::uint64_t{10}}) {
      if (t > t_max) continue;
      const P3Exact ex = p3_exact(t, P3Which::prop5);
      const P3Mc mc = p3_mc(t, P3Which::prop5, cfg.trials, cfg.seed);
      out.push_back(make_report(
          fmt("prop5-mc-t%llu", static_cast<unsigned long long>(t)), mc.freq_event,
          to_double(ex.prob_event), Relation::eq, 0.0, mc.se_event, se_mult,
          fmt("mode=mc trials=%llu seed=%llu", static_cast<unsigned long long>(cfg.trials),
              static_cast<unsigned long long>(cfg.seed))));
    }
  }
  return out;
}

std::vector<VerificationReport> verify_prop6(std::uint64_t t, const SimConfig& cfg, bool with_mc,
                                             double se_mult) {
  const P3Exact ex = p3_exact(t, P3Which::prop6);
  std::vector<VerificationReport> out;
  out.push_back(make_report("prop6-zero-exact", to_double(ex.prob_zero), 0.5, Relation::eq, 0.0,
                            0.0, 0.0,
                            fmt("mode=exact t=%llu", static_cast<unsigned long long>(t))));
  out.push_back(make_report(
      "prop6-threshold-exact", to_double(ex.prob_event), 0.5, Relation::eq, 0.0, 0.0, 0.0,
      fmt("mode=exact t=%llu threshold=%s", static_cast<unsigned long long>(t),
          ex.threshold.str().c_str())));
  if (with_mc) {
    const P3Mc mc = p3_mc(t, P3Which::prop6, cfg.trials, cfg.seed);
    out.push_back(make_report(
        "prop6-zero-mc", mc.freq_zero, 0.5, Relation::eq, 0.0, mc.se_zero, se_mult,
        fmt("mode=mc t=%llu trials=%llu seed=%llu", static_cast<unsigned long long>(t),
            static_cast<unsigned long long>(cfg.trials),
            static_cast<unsigned long long>(cfg.seed))));
    out.push_back(make_report(
        "prop6-threshold-mc", mc.freq_event, 0.5, Relation::eq, 0.0, mc.se_event, se_mult,
        fmt("mode=mc t=%llu trials=%llu seed=%llu", static_cast<unsigned long long>(t),
            static_cast<unsigned long long>(cfg.trials),
            static_cast<unsigned long long>(cfg.seed))));
  }
  return out;
}

namespace {

template <typename RunTrial>
std::vector<SeriesRow> aggregate_impl(std::uint64_t steps, std::uint64_t trials,
                                      RunTrial&& run_trial) {
  if (trials < 1) raise(Errc::bad_parameters, "need at least one trial");
  std::vector<Welford> w_sq(steps + 1), w_d1(steps + 1);
  for (std::uint64_t k = 0; k < trials; ++k) {
    const std::vector<TrajectoryRecord> recs = run_trial(k);
    for (std::uint64_t t = 0; t <= steps; ++t) {
      w_sq[t].add(recs[t].sq_norm2);
      w_d1[t].add(recs[t].delta1);
    }
  }
  std::vector<SeriesRow> rows(steps + 1);
  for (std::uint64_t t = 0; t <= steps; ++t) {
    rows[t] = {t, w_sq[t].mean, w_sq[t].se(), w_d1[t].mean, w_d1[t].se()};
  }
  return rows;
}

}  // namespace

std::vector<SeriesRow> aggregate_trajectories(const Hypergraph& h, const WeightVector& x,
                                              const SimConfig& cfg) {
  return aggregate_impl(cfg.steps, cfg.trials, [&](std::uint64_t k) {
    Xoshiro256PlusPlus rng = stream_for_trial(cfg.seed, k);
    return simulate_with(h, x, cfg.steps, rng);
  });
}

std::vector<SeriesRow> aggregate_trajectories_neighborhood(const Graph& g, const WeightVector& x,
                                                           const SimConfig& cfg) {
  return aggregate_impl(cfg.steps, cfg.trials, [&](std::uint64_t k) {
    Xoshiro256PlusPlus rng = stream_for_trial(cfg.seed, k);
    return neighborhood_simulate_with(g, x, cfg.steps, rng);
  });
}

std::vector<SeriesRow> reproduce_figure(Figure which, std::uint64_t n, std::uint64_t t_max,
                                        const SimConfig& cfg) {
  if (n < 2) raise(Errc::bad_parameters, "figure host needs n >= 2");
  SimConfig run = cfg;
  Hypergraph host(1, {});
  WeightVector x;
  switch (which) {
    case Figure::fs: {
      const std::size_t nv = static_cast<std::size_t>(n) + 1;  // center + n leaves
      host = star_hypergraph(nv);
      x.assign(nv, -1.0 / static_cast<double>(nv));
      x[0] = 1.0 - 1.0 / static_cast<double>(nv);
      if (t_max == 0) {
        t_max = static_cast<std::uint64_t>(
            std::ceil(2.0 * static_cast<double>(n) * std::log(static_cast<double>(n))));
      }
      break;
    }
    case Figure::f1: {
      host = path_hypergraph(n);
      x.assign(n, 0.0);
      x[0] = 1.0;
      x[n - 1] = -1.0;
      if (t_max == 0) t_max = n * n * n;
      break;
    }
    case Figure::f2: {
      host = path_hypergraph(n);
      x.assign(n, -1.0 / static_cast<double>(n));
      x[0] = 1.0 - 1.0 / static_cast<double>(n);
      if (t_max == 0) t_max = n * n * n;
      break;
    }
  }
  run.steps = t_max;
  return aggregate_trajectories(host, x, run);
}

std::vector<ProbeRow> conjecture_probe(Conjecture which, std::uint64_t n, const SimConfig& cfg) {
  if (n < 4) raise(Errc::bad_parameters, "conjecture probes need n >= 4");
  if (n > 2'000'000) raise(Errc::bad_parameters, "n too large for the n^3 horizon");
  std::vector<ProbeRow> rows;
  auto probe = [&](const std::string& name, const Hypergraph& host, const WeightVector& x,
                   std::uint64_t t) {
    const double l2_0 = std::sqrt(sq_about(x, initial_mean(x)));
    const McStats st = mc_final_stats(host, x, t, cfg.trials, cfg.seed);
    rows.push_back({name, t, st.mean_l1, st.se_l1, l2_0, st.mean_l1 / l2_0});
  };
  if (which == Conjecture::conj1) {
    const std::size_t nv = static_cast<std::size_t>(n) + 1;
    const Hypergraph host = star_hypergraph(nv);
    WeightVector x(nv, -1.0 / static_cast<double>(nv));
    x[0] = 1.0 - 1.0 / static_cast<double>(nv);
    const double nlogn = static_cast<double>(n) * std::log(static_cast<double>(n));
    for (int k : {8, 4, 2}) {
      probe(fmt("star:%llu", static_cast<unsigned long long>(n)), host, x,
            static_cast<std::uint64_t>(std::ceil(nlogn / k)));
    }
  } else {
    const Hypergraph host = path_hypergraph(n);
    WeightVector ends(n, 0.0);
    ends[0] = 1.0;
    ends[n - 1] = -1.0;
    WeightVector single(n, -1.0 / static_cast<double>(n));
    single[0] = 1.0 - 1.0 / static_cast<double>(n);
    for (std::uint64_t m : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{4}}) {
      const std::uint64_t t = m * n * n * n;
      probe(fmt("path-endpoints:%llu", static_cast<unsigned long long>(n)), host, ends, t);
      probe(fmt("path-single:%llu", static_cast<unsigned long long>(n)), host, single, t);
    }
  }
  return rows;
}

WeightVector random_weights(std::size_t n, std::uint64_t seed) {
  Xoshiro256PlusPlus rng = stream_for_trial(seed, kWeightsStreamTag);
  WeightVector x(n);
  for (double& v : x) v = rng.next_symmetric();
  return x;
}

}  // namespace hyperavg
