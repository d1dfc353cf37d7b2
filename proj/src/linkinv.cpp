#include "anyonwalk/linkinv.hpp"

#include <algorithm>
#include <set>

#include "anyonwalk/errors.hpp"

namespace anyonwalk {

namespace {

// Pinned strand crossed by the walker, or throws if the walker is absent.
int partner_of_walker(const ClosedLink& link, const Crossing& c) {
  const int w = *link.walker;
  if (c.left_strand == w) return c.right_strand;
  if (c.right_strand == w) return c.left_strand;
  throw UnsupportedLink("crossing at letter " + std::to_string(c.position) +
                        " does not involve the walker strand");
}

void require_star_link(const ClosedLink& link) {
  if (!link.has_identity_permutation()) {
    throw UnsupportedLink("link invariants need an identity braid permutation");
  }
  if (!link.crossings.empty() && !link.walker) {
    throw UnsupportedLink("no strand takes part in every crossing; not a walker link");
  }
}

int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace

LinkingProfile linking_profile(const ClosedLink& link) {
  require_star_link(link);
  LinkingProfile profile;
  if (link.crossings.empty()) return profile;
  std::map<int, int> signed_crossings;
  for (const Crossing& c : link.crossings) signed_crossings[partner_of_walker(link, c)] += c.sign;
  for (const auto& [strand, count] : signed_crossings) {
    if (count % 2 != 0) throw ConsistencyError("odd signed crossing count between two closed components");
    profile.lk[strand] = count / 2;
    profile.total_linking += count / 2;
  }
  return profile;
}

bool is_proper(const LinkingProfile& profile) {
  return std::all_of(profile.lk.begin(), profile.lk.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

int writhe(const ClosedLink& link) {
  int w = 0;
  for (const Crossing& c : link.crossings) w += c.sign;
  return w;
}

ConwayPoly conway_torus2(int m) {
  if (m < 0) throw ConfigError("conway_torus2 needs m >= 0");
  ConwayPoly prev;       // ∇_0 = 0
  ConwayPoly cur{1};     // ∇_1 = 1
  if (m == 0) return prev;
  for (int k = 2; k <= m; ++k) {
    ConwayPoly next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] += prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::int64_t c2_pair(std::int64_t lk) { return lk * (lk * lk - 1) / 6; }

CycMat2 milnor_left_generator() {
  // -ζ^{-1} diag(1, i), i = ζ^4.
  const CycScalar phase = CycScalar::zeta(-1) * CycScalar::integer(-1);
  return {phase, CycScalar{}, CycScalar{}, phase.times_zeta(4)};
}

CycMat2 milnor_right_generator() {
  // -ζ/√2 [[1, -i], [-i, 1]].
  const CycScalar phase = CycScalar::zeta(1) * CycScalar::sqrt2_pow(-1) * CycScalar::integer(-1);
  const CycScalar off = phase * CycScalar::zeta(4) * CycScalar::integer(-1);
  return {phase, off, off, phase};
}

int milnor_c3(const ClosedLink& link, int r, int s) {
  require_star_link(link);
  if (!link.walker) throw NotProperError("link has no walker strand");
  const int w = *link.walker;
  const int n = link.word.strands;
  if (r == s || r == w || s == w || r < 1 || s < 1 || r > n || s > n) {
    throw NotProperError("milnor_c3 needs two distinct pinned strands");
  }
  // Pinned strands never cross each other, so start-slot order is their order.
  const int left = std::min(r, s);
  const int right = std::max(r, s);
  static const CycMat2 gl = milnor_left_generator();
  static const CycMat2 gr = milnor_right_generator();
  static const CycMat2 gl_inv = gl.adjoint();
  static const CycMat2 gr_inv = gr.adjoint();

  CycMat2 product = CycMat2::identity();
  int net = 0;
  for (const Crossing& c : link.crossings) {
    const int other = partner_of_walker(link, c);
    if (other == left) {
      product = (c.sign > 0 ? gl : gl_inv) * product;
    } else if (other == right) {
      product = (c.sign > 0 ? gr : gr_inv) * product;
    } else {
      continue;
    }
    net += c.sign;
  }
  const int sign = product.scaled(CycScalar::zeta(net)).identity_sign();
  if (sign == 0) {
    throw NotProperError("Milnor product for strands (" + std::to_string(left) + ", " + std::to_string(right) +
                         ") is not ±identity: " + product.to_string());
  }
  return sign > 0 ? 0 : 1;
}

int tau(const ClosedLink& link) {
  require_star_link(link);
  std::set<int> crossed;
  for (const Crossing& c : link.crossings) crossed.insert(partner_of_walker(link, c));
  const std::vector<int> pinned(crossed.begin(), crossed.end());
  int sum = 0;
  for (std::size_t i = 0; i < pinned.size(); ++i) {
    for (std::size_t j = i + 1; j < pinned.size(); ++j) sum ^= milnor_c3(link, pinned[i], pinned[j]);
  }
  return sum;
}

std::optional<int> arf(const ClosedLink& link) {
  if (link.has_identity_permutation()) {
    if (link.crossings.empty()) return 0;
    const LinkingProfile profile = linking_profile(link);
    if (!is_proper(profile)) return std::nullopt;
    std::int64_t c2_sum = 0;
    for (const auto& [strand, lk] : profile.lk) c2_sum += c2_pair(lk);
    if (profile.total_linking == 0 && mod2(c2_sum) != 0) {
      throw ConsistencyError("sum of pairwise c2 is odd for a link with zero total linking");
    }
    return (mod2(c2_sum) + tau(link)) % 2;
  }
  if (link.word.strands == 2) {
    // Closure of b^m with m odd: a torus knot, arf = c1 = a_2 of its Conway polynomial.
    const int m = std::abs(writhe(link));
    const ConwayPoly poly = conway_torus2(m);
    return poly.size() > 2 ? mod2(poly[2]) : 0;
  }
  throw UnsupportedLink("arf is implemented for walker links and 2-strand braid closures");
}

BracketValue jones_at_i(const ClosedLink& link) {
  const std::optional<int> a = arf(link);
  if (!a) return BracketValue{};
  BracketValue v = CycScalar::sqrt2_pow(link.num_components - 1);
  return *a ? -v : v;
}

BracketValue jones_from_statesum(const ClosedLink& link, int crossing_cap) {
  const BracketValue bracket = kauffman_bracket_statesum(link, crossing_cap);
  // (-A^3)^{-w} = (-1)^w ζ^{-9w}.
  const int w = writhe(link);
  BracketValue v = bracket.times_zeta(-kBracketAZetaPower * 3 * w);
  return (w % 2 != 0) ? -v : v;
}

}  // namespace anyonwalk
