#include <doctest.h>

#include <cmath>
#include <numbers>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/walkdist.hpp"
#include "oracles.hpp"

using namespace anyonwalk;

namespace {

std::vector<BigInt> big(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

Distribution point_mass(int t, int s0, int s) {
  std::vector<BigInt> num(static_cast<std::size_t>(t) + 1, 0);
  num[static_cast<std::size_t>(s)] = BigInt(1) << t;
  return Distribution::from_numerators(t, s0, DistKind::Bound, num);
}

}  // namespace

TEST_CASE("short walks are mirror pairs only") {
  CHECK(anyonic_distribution_exact(WalkConfig::make(1)).numerators == big({1, 1}));
  CHECK(anyonic_distribution_exact(WalkConfig::make(2)).numerators == big({1, 2, 1}));
  const Distribution d = anyonic_distribution_exact(WalkConfig::make(1));
  CHECK(d.at_position(d.s0 - 1) == 0.5);
  CHECK(d.at_position(d.s0 + 1) == 0.5);
  CHECK(d.at_position(d.s0) == 0.0);
}

TEST_CASE("exact distribution is normalized and non-negative, t <= 12") {
  for (int t = 0; t <= 12; ++t) {
    const Distribution d = anyonic_distribution_exact(WalkConfig::make(t));
    REQUIRE(d.numerator_sum() == BigInt(1) << t);
    for (const BigInt& v : d.numerators) REQUIRE(v >= 0);
  }
}

TEST_CASE("exact distribution equals the pair-by-pair invariant pipeline, t <= 7") {
  for (int t = 1; t <= 7; ++t) {
    const WalkConfig cfg = WalkConfig::make(t);
    const std::vector<std::int64_t> expect = oracle::pairwise_numerators(cfg);
    const Distribution d = anyonic_distribution_exact(cfg);
    for (int s = 0; s <= t; ++s) REQUIRE(d.numerators[static_cast<std::size_t>(s)] == expect[static_cast<std::size_t>(s)]);
  }
}

TEST_CASE("factorized and pairwise exact sums agree, t <= 11") {
  for (int t = 0; t <= 11; ++t) {
    const WalkConfig cfg = WalkConfig::make(t);
    REQUIRE(anyonic_distribution_exact(cfg).numerators == anyonic_distribution_pairwise(cfg).numerators);
  }
}

TEST_CASE("geometry does not change the distribution") {
  const Distribution a = anyonic_distribution_exact(WalkConfig::make(7));
  const Distribution b = anyonic_distribution_exact(WalkConfig::make(7, 30, 12));
  CHECK(a.numerators == b.numerators);
}

TEST_CASE("exact cap") {
  ExactOptions o;
  o.cap = 5;
  CHECK_THROWS_AS(anyonic_distribution_exact(WalkConfig::make(6), o), CapExceeded);
}

TEST_CASE("trivial bracket reproduces the Hadamard walk, t <= 12") {
  ExactOptions o;
  o.mode = TraceMode::StubTrivial;
  for (int t = 0; t <= 12; ++t) {
    const WalkConfig cfg = WalkConfig::make(t);
    REQUIRE(anyonic_distribution_exact(cfg, o).numerators == hadamard_qw(cfg).numerators);
  }
}

TEST_CASE("Hadamard walk") {
  CHECK(hadamard_qw(WalkConfig::make(1)).weights == std::vector<double>{0.5, 0.5});
  CHECK(hadamard_qw(WalkConfig::make(2)).weights == std::vector<double>{0.25, 0.5, 0.25});
  for (int t = 0; t <= 32; ++t) {
    const Distribution q = hadamard_qw(WalkConfig::make(t));
    const std::vector<double> ref = oracle::hadamard_numeric(t);
    for (int s = 0; s <= t; ++s) REQUIRE(std::abs(q.weights[static_cast<std::size_t>(s)] - ref[static_cast<std::size_t>(s)]) < 1e-12);
  }
  for (int t = 0; t <= 32; t += 4) REQUIRE(hadamard_qw(WalkConfig::make(t)).numerator_sum() == BigInt(1) << t);
  // Coin 0 moves left: the walk drifts towards smaller x.
  CHECK(stats(hadamard_qw(WalkConfig::make(20))).mean < WalkConfig::make(20).s0);
}

TEST_CASE("classical walk") {
  CHECK(classical_rw(WalkConfig::make(2)).weights == std::vector<double>{0.25, 0.5, 0.25});
  CHECK(classical_rw(WalkConfig::make(0)).weights == std::vector<double>{1.0});
  for (int t = 0; t <= 30; ++t) REQUIRE(std::abs(stats(classical_rw(WalkConfig::make(t))).variance - t) < 1e-9);
}

TEST_CASE("asymptotic density") {
  CHECK(asymptotic_qw_density(0.0) == doctest::Approx(1.0 / std::numbers::pi));
  CHECK(asymptotic_qw_density(0.8) == 0.0);
  CHECK(asymptotic_qw_density(0.7071) > 10.0);
  // α = sin(θ)/√2 removes the edge singularity.
  const int steps = 20000;
  const double h = std::numbers::pi / steps;
  double sum = 0;
  for (int k = 0; k <= steps; ++k) {
    const double th = -std::numbers::pi / 2 + k * h;
    const double alpha = std::sin(th) / std::sqrt(2.0);
    const double jac = std::cos(th) / std::sqrt(2.0);
    double f = 0;
    if (k != 0 && k != steps) f = asymptotic_qw_density(alpha) * jac;
    else f = (1.0 - alpha) / (std::numbers::pi * (1.0 - alpha * alpha)) / std::sqrt(2.0);
    sum += f * (k == 0 || k == steps ? 1 : (k % 2 ? 4 : 2));
  }
  CHECK(std::abs(sum * h / 3 - 1.0) < 1e-6);
}

TEST_CASE("total variation") {
  const WalkConfig cfg = WalkConfig::make(6);
  const Distribution p = anyonic_distribution_exact(cfg);
  CHECK(total_variation(p, p) == 0.0);
  CHECK(total_variation(point_mass(6, cfg.s0, 0), point_mass(6, cfg.s0, 6)) == 1.0);
  CHECK_THROWS_AS(total_variation(p, classical_rw(WalkConfig::make(5))), ConfigError);
}

TEST_CASE("bounding distributions") {
  const WalkConfig cfg = WalkConfig::make(8);
  const Distribution qw = hadamard_qw(cfg), rw = classical_rw(cfg);
  const BoundingPair zero = bounding_distributions(cfg, std::vector<double>(9, 0.0));
  for (int s = 0; s <= 8; ++s) {
    CHECK(zero.upper.weights[static_cast<std::size_t>(s)] == doctest::Approx(rw.weights[static_cast<std::size_t>(s)]));
    CHECK(zero.lower.weights[static_cast<std::size_t>(s)] == doctest::Approx(rw.weights[static_cast<std::size_t>(s)]));
  }
  const BoundingPair one = bounding_distributions(cfg, std::vector<double>(9, 1.0));
  for (int s = 0; s <= 8; ++s) {
    CHECK(one.upper.weights[static_cast<std::size_t>(s)] == doctest::Approx(qw.weights[static_cast<std::size_t>(s)]));
    CHECK(one.lower.weights[static_cast<std::size_t>(s)] == doctest::Approx(s == 4 ? 1.0 : 0.0));
  }
  CHECK_THROWS_AS(bounding_distributions(cfg, std::vector<double>(9, 1.5)), ConfigError);
  CHECK_THROWS_AS(bounding_distributions(cfg, std::vector<double>(3, 0.5)), ConfigError);
}

TEST_CASE("anyonic walk sits closer to the random walk, t = 8..12") {
  for (int t = 8; t <= 12; ++t) {
    const WalkConfig cfg = WalkConfig::make(t);
    const Distribution p = anyonic_distribution_exact(cfg);
    const Distribution qw = hadamard_qw(cfg), rw = classical_rw(cfg);
    CHECK(total_variation(p, rw) < total_variation(p, qw));
    const double var = stats(p).variance;
    CHECK(std::abs(var - t) < std::abs(var - stats(qw).variance));
  }
}

TEST_CASE("Monte Carlo: zero samples give the random walk") {
  MCOptions o;
  o.seed = 1;
  const WalkConfig cfg = WalkConfig::make(10);
  const MCResult r = anyonic_distribution_mc(cfg, o);
  const Distribution rw = classical_rw(cfg);
  for (int s = 0; s <= 10; ++s) CHECK(r.distribution.weights[static_cast<std::size_t>(s)] == doctest::Approx(rw.weights[static_cast<std::size_t>(s)]));
}

TEST_CASE("Monte Carlo: full coverage equals exact") {
  for (int t : {6, 8}) {
    MCOptions o;
    o.seed = 9;
    o.samples = 100000;
    const WalkConfig cfg = WalkConfig::make(t);
    const MCResult r = anyonic_distribution_mc(cfg, o);
    const Distribution e = anyonic_distribution_exact(cfg);
    for (const MCStratum& st : r.estimate.strata) CHECK((st.exhaustive || st.non_mirror_pairs == 0));
    for (int s = 0; s <= t; ++s) CHECK(r.distribution.weights[static_cast<std::size_t>(s)] == e.weights[static_cast<std::size_t>(s)]);
  }
}

TEST_CASE("Monte Carlo: sampled strata are unbiased within error bars") {
  const WalkConfig cfg = WalkConfig::make(12);
  const Distribution e = anyonic_distribution_exact(cfg);
  MCOptions o;
  o.samples = 3000;
  o.exhaustive_histories = 0;
  int outside = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    o.seed = seed;
    const MCResult r = anyonic_distribution_mc(cfg, o);
    for (int s = 0; s <= 12; ++s) {
      const double se = r.distribution.std_errors[static_cast<std::size_t>(s)];
      if (!(se > 0)) continue;
      ++total;
      if (std::abs(r.distribution.weights[static_cast<std::size_t>(s)] - e.weights[static_cast<std::size_t>(s)]) > 3 * se) ++outside;
    }
  }
  CHECK(total > 20);
  CHECK(outside <= 2);
}

TEST_CASE("Monte Carlo: errors shrink with samples") {
  const WalkConfig cfg = WalkConfig::make(18);
  MCOptions o;
  o.seed = 4;
  o.exhaustive_histories = 0;
  o.samples = 5000;
  const MCResult small = anyonic_distribution_mc(cfg, o);
  o.samples = 20000;
  const MCResult large = anyonic_distribution_mc(cfg, o);
  double a = 0, b = 0;
  for (int s = 5; s <= 13; ++s) {
    a += small.distribution.std_errors[static_cast<std::size_t>(s)];
    b += large.distribution.std_errors[static_cast<std::size_t>(s)];
  }
  CHECK(a / b > 1.3);
  CHECK(a / b < 4.0);
}

TEST_CASE("Monte Carlo is deterministic across thread counts") {
  const WalkConfig cfg = WalkConfig::make(14);
  MCOptions o;
  o.seed = 77;
  o.samples = 30000;
  o.exhaustive_histories = 0;
  o.threads = 1;
  const MCResult one = anyonic_distribution_mc(cfg, o);
  o.threads = 3;
  const MCResult three = anyonic_distribution_mc(cfg, o);
  CHECK(one.distribution.weights == three.distribution.weights);
  CHECK(one.distribution.std_errors == three.distribution.std_errors);
  o.seed = 78;
  CHECK(anyonic_distribution_mc(cfg, o).distribution.weights != one.distribution.weights);
}

TEST_CASE("coin parity") {
  CHECK(coin_parity_z(PathPair(CoinHistory::parse("11"), CoinHistory::parse("11"))) == 0);
  CHECK(coin_parity_z(PathPair(CoinHistory::parse("000"), CoinHistory::parse("000"))) == 0);
  CHECK(coin_parity_z(PathPair(CoinHistory::parse("0111"), CoinHistory::parse("1101"))) == 1);
}
