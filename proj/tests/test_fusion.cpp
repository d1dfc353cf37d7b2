#include <doctest.h>

#include <cmath>
#include <random>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/fusion_oracle.hpp"
#include "anyonwalk/linkinv.hpp"
#include "anyonwalk/walkdist.hpp"
#include "oracles.hpp"

using namespace anyonwalk;

namespace {

using Mat = std::vector<Complex>;

Mat mul(const Mat& a, const Mat& b, std::size_t d) {
  Mat c(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i * d + j] += a[i * d + k] * b[k * d + j];
  return c;
}

double distance(const Mat& a, const Mat& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Mat identity(std::size_t d) {
  Mat m(d * d);
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1.0;
  return m;
}

Complex bracket_trace(const BraidWord& w) {
  return kauffman_bracket_statesum(close_link(w)).to_complex() * std::pow(2.0, -0.5 * (w.strands - 1));
}

}  // namespace

TEST_CASE("representation size") {
  CHECK(IsingRep(2).dim() == 2);
  CHECK(IsingRep(3).dim() == 4);
  CHECK(IsingRep(8).dim() == 16);
  CHECK_THROWS(IsingRep(IsingRep::kMaxStrands + 1));
}

TEST_CASE("generators are unitary with inverse given by sign -1") {
  for (int n = 2; n <= 8; ++n) {
    const IsingRep rep(n);
    const std::size_t d = rep.dim();
    for (int j = 1; j < n; ++j) {
      const Mat g = rep.generator_matrix(j, 1), gi = rep.generator_matrix(j, -1);
      REQUIRE(distance(mul(g, gi, d), identity(d)) < 1e-12);
      Mat adj(d * d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) adj[r * d + c] = std::conj(g[c * d + r]);
      REQUIRE(distance(adj, gi) < 1e-12);
    }
  }
}

TEST_CASE("braid relations hold, n <= 12") {
  for (int n = 3; n <= 12; ++n) {
    const IsingRep rep(n);
    const std::size_t d = rep.dim();
    std::vector<Mat> g;
    for (int j = 1; j < n; ++j) g.push_back(rep.generator_matrix(j));
    for (int j = 0; j + 1 < n - 1; ++j) {
      const Mat lhs = mul(mul(g[j], g[j + 1], d), g[j], d);
      const Mat rhs = mul(mul(g[j + 1], g[j], d), g[j + 1], d);
      REQUIRE(distance(lhs, rhs) < 1e-12);
    }
    for (int j = 0; j < n - 1; ++j)
      for (int k = j + 2; k < n - 1; ++k) REQUIRE(distance(mul(g[j], g[k], d), mul(g[k], g[j], d)) < 1e-12);
  }
}

TEST_CASE("eighth power is a multiple of the identity") {
  const IsingRep rep(5);
  const std::size_t d = rep.dim();
  for (int j = 1; j < 5; ++j) {
    Mat p = identity(d);
    const Mat g = rep.generator_matrix(j);
    for (int k = 0; k < 8; ++k) p = mul(p, g, d);
    const Complex c = p[0];
    CHECK(std::abs(std::abs(c) - 1.0) < 1e-12);
    Mat scaled = identity(d);
    for (auto& v : scaled) v *= c;
    CHECK(distance(p, scaled) < 1e-12);
  }
}

TEST_CASE("two-strand eigenphases differ by a quarter turn") {
  const Mat g = IsingRep(2).generator_matrix(1);
  // 2x2 eigenvalues from trace and determinant.
  const Complex tr = g[0] + g[3], det = g[0] * g[3] - g[1] * g[2];
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  const Complex l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
  const Complex ratio = l1 / l2;
  CHECK(std::abs(std::abs(ratio.imag()) - 1.0) < 1e-12);
  CHECK(std::abs(ratio.real()) < 1e-12);
  // The spectrum is {A, -A^-3} with A = e^{3πi/8}.
  const Complex a = std::polar(1.0, 3 * M_PI / 8), b = -std::pow(a, -3);
  CHECK(std::min(std::abs(l1 - a) + std::abs(l2 - b), std::abs(l1 - b) + std::abs(l2 - a)) < 1e-12);
}

TEST_CASE("trace of empty and mirror words") {
  const IsingRep rep(6);
  BraidWord empty;
  empty.strands = 6;
  CHECK(std::abs(fusion_trace(rep, empty) - 1.0) < 1e-12);
  std::mt19937_64 rng(2);
  BraidWord w = oracle::random_word(rng, 6, 9);
  BraidWord mirror = w;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) mirror.letters.push_back({it->index, -it->sign});
  CHECK(std::abs(fusion_trace(rep, mirror) - 1.0) < 1e-12);
}

TEST_CASE("trace equals the normalized bracket on random words") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const BraidWord w = oracle::random_word(rng, n, static_cast<int>(rng() % 11));
    const Complex tr = fusion_trace(IsingRep(n), w);
    REQUIRE(std::abs(tr - bracket_trace(w)) < 1e-9);
    REQUIRE(std::abs(fusion_trace_windowed(w) - tr) < 1e-9);
  }
  for (int n = 2; n <= 8; ++n) {
    for (int j = 1; j < n; ++j) {
      BraidWord single;
      single.strands = n;
      single.letters = {{j, 1}};
      REQUIRE(std::abs(fusion_trace(IsingRep(n), single) - bracket_trace(single)) < 1e-9);
    }
  }
}

TEST_CASE("a wrong generator phase breaks the trace-bracket identity") {
  BraidWord single;
  single.strands = 3;
  single.letters = {{1, 1}};
  CHECK(std::abs(fusion_trace(IsingRep(3, 3), single) - bracket_trace(single)) > 1e-3);
}

TEST_CASE("matrix oracle reproduces the exact distribution, t <= 6") {
  for (int t = 0; t <= 6; ++t) {
    const WalkConfig cfg = WalkConfig::make(t);
    const Distribution o = oracle_distribution(cfg);
    const Distribution e = anyonic_distribution_exact(cfg);
    for (int s = 0; s <= t; ++s) REQUIRE(std::abs(o.weights[static_cast<std::size_t>(s)] - e.weights[static_cast<std::size_t>(s)]) < 1e-9);
  }
  const Distribution two = oracle_distribution(WalkConfig::make(2));
  CHECK(two.weights[0] == doctest::Approx(0.25));
  CHECK(two.weights[1] == doctest::Approx(0.5));
}

TEST_CASE("a global generator phase leaves the distribution unchanged") {
  for (int t = 3; t <= 5; ++t) {
    const WalkConfig cfg = WalkConfig::make(t);
    OracleOptions o;
    const Distribution base = oracle_distribution(cfg, o);
    o.phase_eighths = 5;
    const Distribution shifted = oracle_distribution(cfg, o);
    for (int s = 0; s <= t; ++s) CHECK(std::abs(base.weights[static_cast<std::size_t>(s)] - shifted.weights[static_cast<std::size_t>(s)]) < 1e-9);
  }
}

TEST_CASE("oracle cap") {
  OracleOptions o;
  o.cap = 3;
  CHECK_THROWS_AS(oracle_distribution(WalkConfig::make(4), o), CapExceeded);
}
