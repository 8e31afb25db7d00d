#include <doctest.h>

#include <cmath>
#include <functional>

#include "hyperavg/experiments.hpp"
#include "hyperavg/families.hpp"
#include "hyperavg/p3.hpp"
#include "hyperavg/spectral.hpp"
#include "oracles.hpp"

using namespace hyperavg;

namespace {

// Exhaustive 3-path oracle: walks every edge sequence of length t in exact
// arithmetic and tallies the leaf statistics the propositions talk about.
// Independent of the closed-form binomial code under test.
struct P3Tally {
  Rational p_event;       // P[ sq >= threshold ]
  Rational p_zero;        // P[ sq == 0 ]
  Rational min_nonzero;   // smallest nonzero leaf sq (0 when none)
};

P3Tally p3_enumerate(const RationalVector& x0, std::uint64_t t, const Rational& threshold) {
  BigInt event = 0, zero = 0;
  Rational min_nonzero = -1;
  RationalVector s = x0;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t depth) {
    if (depth == t) {
      const Rational sq = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];  // mean stays 0
      if (sq >= threshold) ++event;
      if (sq == 0) {
        ++zero;
      } else if (min_nonzero < 0 || sq < min_nonzero) {
        min_nonzero = sq;
      }
      return;
    }
    for (int e = 0; e < 2; ++e) {
      const RationalVector saved = s;
      const Rational m = (s[e] + s[e + 1]) / 2;
      s[e] = m;
      s[e + 1] = m;
      rec(depth + 1);
      s = saved;
    }
  };
  rec(0);
  const Rational total = Rational(BigInt(1) << t);
  return {Rational(event) / total, Rational(zero) / total,
          min_nonzero < 0 ? Rational(0) : min_nonzero};
}

}  // namespace

TEST_SUITE_BEGIN("experiments");

TEST_CASE("verdict rule") {
  CHECK(verdict_of(1.0, 1.0, Relation::eq, 0.0));
  // dyadic literals so the boundary comparisons are exact in binary floating point
  CHECK(verdict_of(1.0625, 1.0, Relation::eq, 0.0625));
  CHECK_FALSE(verdict_of(1.07, 1.0, Relation::eq, 0.0625));
  CHECK(verdict_of(106.25, 100.0, Relation::eq, 0.0625));  // relative above |ref| = 1
  CHECK_FALSE(verdict_of(107.0, 100.0, Relation::eq, 0.0625));
  CHECK(verdict_of(0.9, 1.0, Relation::le, 0.0));
  CHECK(verdict_of(1.0 + 1e-13, 1.0, Relation::le, 1e-12));
  CHECK_FALSE(verdict_of(1.1, 1.0, Relation::le, 1e-12));
  CHECK(verdict_of(0.5, 0.5, Relation::ge, 0.0));
  CHECK_FALSE(verdict_of(0.49, 0.5, Relation::ge, 0.0));
}

TEST_CASE("reports fold the standard error into the tolerance") {
  const auto r = make_report("claim", 1.0, 2.0, Relation::le, 1e-10, 0.25, 4.0, "meta");
  CHECK(r.tolerance == doctest::Approx(1e-10 + 1.0).epsilon(1e-12));
  CHECK(r.stderr_measured == 0.25);
  CHECK(r.verdict);
}

TEST_CASE("decay bound holds exactly on the worked example") {
  const Hypergraph h(4, {{0, 1}, {0, 1}, {1, 2, 3}});
  Xoshiro256PlusPlus wrng(21);
  const auto x = oracle::random_vector(wrng, 4);
  for (std::uint64_t t = 1; t <= 4; ++t) {
    const auto r = verify_theorem2(h, x, t, /*exact=*/true, SimConfig{3, t, 0});
    CHECK(r.verdict);
    CHECK(r.stderr_measured == 0.0);
    CHECK(r.relation == Relation::le);
  }
  const auto mc = verify_theorem2(h, x, 6, /*exact=*/false, SimConfig{3, 6, 40000});
  CHECK(mc.verdict);
  CHECK(mc.stderr_measured > 0.0);
}

TEST_CASE("codegree-regular decay is an exact rational identity") {
  // E||A^t x - xbar||^2 = rho^t ||x - xbar||^2 with rho = 1 - (r-1)/(n-1),
  // checked with zero tolerance in exact arithmetic.
  const auto cases = {std::pair<std::size_t, std::size_t>{4, 2}, {5, 3}, {5, 4}};
  for (const auto& [n, r] : cases) {
    const auto h = complete_r_uniform(n, r);
    RationalVector x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(static_cast<long>(i * i + 1), 7);
    Rational mean = 0;
    for (const auto& v : x) mean += v;
    mean /= static_cast<long>(n);
    Rational sq0 = 0;
    for (const auto& v : x) sq0 += (v - mean) * (v - mean);
    const Rational rho = Rational(1) - Rational(static_cast<long>(r - 1), static_cast<long>(n - 1));
    Rational want = sq0;
    for (std::uint64_t t = 1; t <= 3; ++t) {
      want *= rho;
      CHECK(exact_expected_sq_norm_rational(h, x, t) == want);
    }
  }
}

TEST_CASE("theorem-3 reports: exact equality and MC agreement") {
  const auto exact = verify_theorem3(6, 3, 4, SimConfig{11, 4, 0}, /*exact=*/true);
  CHECK(exact.verdict);
  CHECK(exact.relation == Relation::eq);
  const auto fano = verify_theorem3_on(fano_plane(), random_weights(7, 23), 4,
                                       SimConfig{23, 4, 0}, /*exact=*/true);
  CHECK(fano.verdict);
  const auto mc = verify_theorem3(6, 3, 20, SimConfig{5, 20, 60000}, /*exact=*/false);
  CHECK(mc.verdict);
  CHECK(mc.stderr_measured > 0.0);
  // non-regular instances are rejected
  CHECK_THROWS_AS(
      verify_theorem3_on(path_hypergraph(4), random_weights(4, 1), 2, SimConfig{1, 2, 0}, true),
      Error);
}

TEST_CASE("neighborhood bound: exact on K4, MC on Petersen") {
  for (std::uint64_t t = 1; t <= 4; ++t) {
    const auto r =
        verify_theorem4(complete_graph(4), random_weights(4, 31), t, SimConfig{31, t, 0}, true);
    CHECK(r.verdict);
  }
  const auto mc = verify_theorem4(petersen_graph(), random_weights(10, 32), 5,
                                  SimConfig{32, 5, 50000}, false);
  CHECK(mc.verdict);
}

TEST_CASE("lower-tail probabilities match the exhaustive path oracle") {
  for (std::uint64_t t = 1; t <= 12; ++t) {
    const auto exact = p3_exact(t, P3Which::prop5);
    const Rational threshold(BigInt(1), BigInt(1) << t);
    CHECK(exact.threshold == threshold);
    const auto tally =
        p3_enumerate({Rational(1), Rational(-1, 2), Rational(-1, 2)}, t, threshold);
    CHECK(exact.prob_event == tally.p_event);
    CHECK(exact.prob_event >= Rational(1, 2));
  }
}

TEST_CASE("the (1/2, 1/2) pair matches the exhaustive path oracle") {
  for (std::uint64_t t = 1; t <= 10; ++t) {
    const auto exact = p3_exact(t, P3Which::prop6);
    const auto tally = p3_enumerate({Rational(1), Rational(-1), Rational(0)}, t, exact.threshold);
    CHECK(tally.p_zero == Rational(1, 2));
    CHECK(exact.prob_zero == tally.p_zero);
    CHECK(exact.prob_event == tally.p_event);
    CHECK(tally.p_event == Rational(1, 2));
    // every nonzero leaf clears the certified threshold, and the bound is tight
    CHECK(tally.min_nonzero == exact.threshold);
  }
}

TEST_CASE("proposition reports: exact sweeps pass with zero tolerance") {
  const auto r5 = verify_prop5(12, SimConfig{41, 0, 30000}, /*with_mc=*/true);
  std::size_t exact_rows = 0, mc_rows = 0;
  for (const auto& r : r5) {
    CHECK(r.verdict);
    if (r.stderr_measured == 0.0) {
      ++exact_rows;
      CHECK(r.tolerance == 0.0);
    } else {
      ++mc_rows;
    }
  }
  CHECK(exact_rows == 12);
  CHECK(mc_rows == 2);  // t = 5 and t = 10

  const auto r6 = verify_prop6(9, SimConfig{43, 0, 30000}, /*with_mc=*/true);
  REQUIRE(r6.size() == 4);
  for (const auto& r : r6) CHECK(r.verdict);
}

TEST_CASE("corollary thresholds follow the spectral formula") {
  const auto h = complete_r_uniform(6, 3);
  const double l1 = lambda1(h);
  const auto th = corollary_thresholds(h, 1.0);
  const double rm = 3.0 * 20.0;
  CHECK(th.t_l2 == static_cast<std::uint64_t>(std::ceil(2.0 * rm / l1)));
  CHECK(th.t_l1 == static_cast<std::uint64_t>(std::ceil((std::log(6.0) + 2.0) * rm / l1)));
  CHECK_THROWS_AS(corollary_thresholds(h, 0.0), Error);
  CHECK_THROWS_AS(corollary_thresholds(Hypergraph(4, {{0, 1}, {2, 3}}), 1.0), Error);

  const auto reports = verify_corollary(h, random_weights(6, 51), 1.0, SimConfig{51, 0, 20000});
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK(r.verdict);
    CHECK(r.relation == Relation::le);
  }
}

TEST_CASE("trajectory aggregation reports per-step statistics") {
  const auto h = complete_r_uniform(5, 2);
  const auto x = random_weights(5, 3);
  const auto rows = aggregate_trajectories(h, x, SimConfig{3, 25, 48});
  REQUIRE(rows.size() == 26);
  CHECK(rows[0].t == 0);
  CHECK(rows[0].se_sq == 0.0);
  CHECK(rows[0].se_d1 == 0.0);
  CHECK(rows.back().mean_sq < rows.front().mean_sq);
  for (const auto& row : rows) {
    CHECK(row.mean_sq >= 0.0);
    CHECK(row.se_sq >= 0.0);
  }
  const auto g = petersen_graph();
  const auto nrows = aggregate_trajectories_neighborhood(g, random_weights(10, 4),
                                                         SimConfig{4, 25, 32});
  REQUIRE(nrows.size() == 26);
  CHECK(nrows.back().mean_sq < nrows.front().mean_sq);
}

TEST_CASE("figure reproductions use the documented defaults") {
  const auto fs = reproduce_figure(Figure::fs, 30, 0, SimConfig{7, 0, 8});
  const auto want_t = static_cast<std::size_t>(
      std::ceil(2.0 * 30.0 * std::log(30.0)));
  REQUIRE(fs.size() == want_t + 1);
  CHECK(fs.back().mean_d1 < 0.5 * fs.front().mean_d1);

  const auto f1 = reproduce_figure(Figure::f1, 5, 0, SimConfig{7, 0, 8});
  REQUIRE(f1.size() == 126);  // 5^3 + 1
  CHECK(f1.back().mean_d1 < 0.5 * f1.front().mean_d1);

  const auto f2 = reproduce_figure(Figure::f2, 5, 40, SimConfig{7, 0, 8});
  REQUIRE(f2.size() == 41);  // explicit horizon wins over the default
}

TEST_CASE("conjecture probes emit data rows without verdicts") {
  const auto rows1 = conjecture_probe(Conjecture::conj1, 24, SimConfig{9, 0, 8});
  REQUIRE(rows1.size() == 3);  // horizons n ln n / {8,4,2}
  for (const auto& r : rows1) {
    CHECK(r.instance == "star:24");
    CHECK(r.ratio == doctest::Approx(r.mean_delta1 / r.ell2_initial).epsilon(1e-12));
  }
  const auto rows2 = conjecture_probe(Conjecture::conj2, 6, SimConfig{9, 0, 8});
  REQUIRE(rows2.size() == 6);  // two starting vectors, three horizons
  CHECK_THROWS_AS(conjecture_probe(Conjecture::conj1, 3, SimConfig{9, 0, 8}), Error);
}

TEST_CASE("random weights are deterministic, bounded and seed-sensitive") {
  const auto a = random_weights(16, 5);
  const auto b = random_weights(16, 5);
  const auto c = random_weights(16, 6);
  CHECK(a == b);
  CHECK(a != c);
  for (double v : a) {
    CHECK(v >= -1.0);
    CHECK(v < 1.0);
  }
}

TEST_SUITE_END();
