#include <doctest.h>

#include <random>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/linkinv.hpp"
#include "anyonwalk/pair_enumeration.hpp"
#include "anyonwalk/random_words.hpp"
#include "anyonwalk/walkdist.hpp"
#include "oracles.hpp"

using namespace anyonwalk;

namespace {

ClosedLink link_of(std::initializer_list<BraidLetter> letters, int strands, std::optional<int> walker = std::nullopt) {
  BraidWord w;
  w.letters = letters;
  w.strands = strands;
  return close_link(w, walker);
}

ClosedLink two_step_example() {
  return walk_link(PathPair(CoinHistory::parse("10011"), CoinHistory::parse("01101")), WalkConfig::make(5));
}

std::int64_t binom(int m, int k) {
  if (k < 0 || k > m) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("proper and writhe on small cases") {
  LinkingProfile p;
  CHECK(is_proper(p));
  p.lk = {{2, 0}, {3, 0}};
  CHECK(is_proper(p));
  p.lk = {{2, 1}};
  CHECK_FALSE(is_proper(p));
  p.lk = {{2, 2}, {3, -2}};
  CHECK(is_proper(p));

  CHECK(writhe(link_of({}, 3)) == 0);
  CHECK(writhe(link_of({{1, 1}, {1, 1}}, 2)) == 2);
}

TEST_CASE("walk links have zero writhe and zero total linking, t <= 6") {
  for (int t = 1; t <= 6; ++t) {
    const WalkConfig cfg = WalkConfig::make(t);
    for (std::uint32_t x = 0; x < (1u << t); ++x) {
      for (std::uint32_t y = 0; y < (1u << t); ++y) {
        const CoinHistory a(x, t), b(y, t);
        if (a.weight() != b.weight() || a.last() != b.last()) continue;
        const ClosedLink link = walk_link(PathPair(a, b), cfg);
        REQUIRE(writhe(link) == 0);
        REQUIRE(linking_profile(link).total_linking == 0);
      }
    }
  }
}

TEST_CASE("Conway polynomials of 2-strand torus links") {
  CHECK(conway_torus2(0).empty());
  CHECK(conway_torus2(1) == ConwayPoly{1});
  CHECK(conway_torus2(2) == ConwayPoly{0, 1});
  CHECK(conway_torus2(4) == ConwayPoly{0, 2, 0, 1});
  CHECK(conway_torus2(8) == ConwayPoly{0, 4, 0, 10, 0, 6, 0, 1});
  // Closed form: coefficient of z^{m-1-2k} is C(m-1-k, k).
  for (int m = 1; m <= 40; ++m) {
    const ConwayPoly p = conway_torus2(m);
    REQUIRE(static_cast<int>(p.size()) == m);
    for (int k = 0; 2 * k <= m - 1; ++k) REQUIRE(p[static_cast<std::size_t>(m - 1 - 2 * k)] == binom(m - 1 - k, k));
  }
}

TEST_CASE("c2 matches the cubic Conway coefficient") {
  CHECK(c2_pair(0) == 0);
  CHECK(c2_pair(2) == 1);
  CHECK(c2_pair(4) == 10);
  CHECK(c2_pair(-2) == -1);
  for (int lk = 1; lk <= 15; ++lk) {
    const ConwayPoly p = conway_torus2(2 * lk);
    REQUIRE(p.size() >= 2);
    REQUIRE((p.size() > 3 ? p[3] : 0) == c2_pair(lk));
  }
}

TEST_CASE("Milnor product on odd pairwise linking is rejected") {
  const ClosedLink link = link_of({{1, 1}, {1, 1}, {2, 1}, {2, 1}}, 3, 2);
  CHECK_THROWS_AS(milnor_c3(link, 1, 3), NotProperError);
}

TEST_CASE("Milnor generators square to phased Pauli matrices") {
  const CycMat2 l = milnor_left_generator(), r = milnor_right_generator();
  const CycScalar phase = CycScalar::zeta(-2);
  const CycMat2 z(CycScalar::integer(1), CycScalar(), CycScalar(), CycScalar::integer(-1));
  const CycMat2 x(CycScalar(), CycScalar::integer(1), CycScalar::integer(1), CycScalar());
  CHECK(l * l == z.scaled(phase));
  CHECK(r * r == x.scaled(phase));
}

TEST_CASE("two-pinned-strand walk with no surviving letters gives c3 = 0") {
  const ClosedLink link = link_of({}, 4, 2);
  CHECK(milnor_c3(link, 1, 3) == 0);
}

TEST_CASE("the two-step example link") {
  const ClosedLink link = two_step_example();
  const LinkingProfile p = linking_profile(link);
  CHECK(is_proper(p));
  for (const auto& [strand, lk] : p.lk) CHECK(lk == 0);
  CHECK(tau(link) == 1);
  CHECK(arf(link) == 1);
  CHECK(jones_at_i(link) == -CycScalar::sqrt2_pow(11));
  CHECK(jones_from_statesum(link) == -CycScalar::sqrt2_pow(11));
  const PathPair pair(CoinHistory::parse("10011"), CoinHistory::parse("01101"));
  CHECK(pair.a().consecutive_right_pairs() + pair.a_prime().consecutive_right_pairs() == 2);
  CHECK(coin_parity_z(pair) == 0);
}

TEST_CASE("mirror links are trivial") {
  const WalkConfig cfg = WalkConfig::make(4);
  const ClosedLink link = walk_link(PathPair(CoinHistory::parse("0110"), CoinHistory::parse("0110")), cfg);
  CHECK(tau(link) == 0);
  CHECK(jones_at_i(link) == CycScalar::sqrt2_pow(cfg.n - 1));
}

TEST_CASE("unlink, Hopf link and trefoil") {
  CHECK(jones_at_i(link_of({}, 5)) == CycScalar::sqrt2_pow(4));
  CHECK(kauffman_bracket_statesum(link_of({}, 1)) == CycScalar::integer(1));

  const ClosedLink hopf = link_of({{1, 1}, {1, 1}}, 2);
  CHECK(jones_at_i(hopf).is_zero());
  CHECK(kauffman_bracket_statesum(hopf).is_zero());

  const ClosedLink trefoil = link_of({{1, 1}, {1, 1}, {1, 1}}, 2);
  CHECK(arf(trefoil) == 1);
  CHECK(jones_from_statesum(trefoil) == CycScalar::integer(-1));
  CHECK(jones_at_i(trefoil) == CycScalar::integer(-1));
}

TEST_CASE("state-sum cap") {
  const ClosedLink link = link_of({{1, 1}, {1, -1}, {1, 1}, {1, -1}}, 2);
  CHECK_THROWS_AS(kauffman_bracket_statesum(link, 3), CapExceeded);
  CHECK_NOTHROW(kauffman_bracket_statesum(link, 4));
}

TEST_CASE("arf route equals the state sum on every walk link, t <= 4") {
  for (int t = 1; t <= 4; ++t) {
    const WalkConfig cfg = WalkConfig::make(t);
    for (std::uint32_t x = 0; x < (1u << t); ++x) {
      for (std::uint32_t y = 0; y < (1u << t); ++y) {
        const CoinHistory a(x, t), b(y, t);
        if (a.weight() != b.weight() || a.last() != b.last()) continue;
        const ClosedLink link = walk_link(PathPair(a, b), cfg);
        REQUIRE(jones_at_i(link) == jones_from_statesum(link));
      }
    }
  }
}

TEST_CASE("arf route equals the state sum on random star words") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 400; ++k) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int len = 2 * static_cast<int>(rng() % 7);
    const ClosedLink link = close_link(random_star_word(rng, n, len));
    REQUIRE(link.has_identity_permutation());
    REQUIRE(jones_at_i(link) == jones_from_statesum(link));
  }
}

TEST_CASE("Milnor c3 is symmetric and survives cancelling pairs") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 200) {
    const int n = 3 + static_cast<int>(rng() % 4);
    BraidWord w = random_star_word(rng, n, 2 * static_cast<int>(1 + rng() % 6));
    const ClosedLink link = close_link(w);
    if (!link.walker || !is_proper(linking_profile(link))) continue;
    const int walker_slot = *link.walker;  // strand id equals its starting slot
    const int before = tau(link);
    for (const auto& [r, lr] : linking_profile(link).lk) {
      for (const auto& [s, ls] : linking_profile(link).lk) {
        if (r < s) REQUIRE(milnor_c3(link, r, s) == milnor_c3(link, s, r));
      }
    }
    // Insert b b^-1 next to the walker at the front of the word.
    const int j = walker_slot < n ? walker_slot : walker_slot - 1;
    w.letters.insert(w.letters.begin(), {{j, 1}, {j, -1}});
    const ClosedLink padded = close_link(w, walker_slot);
    REQUIRE(tau(padded) == before);
    REQUIRE(jones_at_i(padded) == jones_at_i(link));
    ++checked;
  }
}

TEST_CASE("group-table engine matches link construction for every pair, t <= 6") {
  for (int t = 1; t <= 6; ++t) {
    const WalkConfig cfg = WalkConfig::make(t);
    const PairEngine engine(cfg);
    for (std::uint32_t x = 0; x < (1u << t); ++x) {
      const HistoryFactor fx = engine.factor(x);
      for (std::uint32_t y = 0; y < (1u << t); ++y) {
        const CoinHistory a(x, t), b(y, t);
        if (a.weight() != b.weight() || a.last() != b.last()) continue;
        const PathPair pair(a, b);
        const ClosedLink link = walk_link(pair, cfg);
        int expected = 0;
        if (is_proper(linking_profile(link))) expected = (coin_parity_z(pair) ^ tau(link)) ? -1 : 1;
        REQUIRE(engine.term(engine.describe(x), engine.describe(y)) == expected);
        const HistoryFactor fy = engine.factor(y);
        if (expected != 0) {
          REQUIRE(fx.class_hash == fy.class_hash);
          REQUIRE(fx.sign * fy.sign == expected);
        } else {
          REQUIRE(fx.signature != fy.signature);
        }
      }
    }
  }
}

TEST_CASE("unsupported links are refused") {
  const ClosedLink three = link_of({{1, 1}, {2, 1}}, 3);
  CHECK_THROWS_AS(arf(three), UnsupportedLink);
}
