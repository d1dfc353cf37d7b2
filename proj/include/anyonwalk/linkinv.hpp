#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "anyonwalk/braidgen.hpp"
#include "anyonwalk/cyclotomic.hpp"

namespace anyonwalk {

// Bracket conventions: A = exp(3iπ/8) = ζ^3, loop value d = -A^2 - A^{-2} = √2,
// q = A^{-4} = i. The unknot has bracket 1.
inline constexpr int kBracketAZetaPower = 3;
inline constexpr std::string_view kBracketConvention = "A=exp(3*pi*i/8); d=-A^2-A^-2=sqrt(2); q=A^-4=i; <unknot>=1";

using BracketValue = CycScalar;

/// Linking numbers of the walker with each pinned strand (keyed by strand id).
struct LinkingProfile {
  std::map<int, int> lk;
  int total_linking = 0;
};

/// Coefficients a_0, a_1, ... of the Conway polynomial.
using ConwayPoly = std::vector<std::int64_t>;

/// Requires identity permutation and every crossing to involve the walker.
LinkingProfile linking_profile(const ClosedLink& link);

bool is_proper(const LinkingProfile& profile);

int writhe(const ClosedLink& link);

/// Conway polynomial of the closure of the 2-strand braid b^m, m >= 0, from
/// the skein recursion ∇_m = z∇_{m-1} + ∇_{m-2}, ∇_0 = 0, ∇_1 = 1.
ConwayPoly conway_torus2(int m);

/// Coefficient of z^3 in the Conway polynomial of a 2-component link with
/// linking number lk: lk(lk^2 - 1)/6.
std::int64_t c2_pair(std::int64_t lk);

/// The 2x2 Ising matrices for the three-strand sublink (walker, r, s):
/// crossings with the left pinned strand r and with the right one s.
CycMat2 milnor_left_generator();
CycMat2 milnor_right_generator();

/// Milnor triple invariant c3(L_r, L_w, L_s) mod 2 for two pinned strands of
/// a proper star link. Keeps the letters where the walker crosses r or s,
/// multiplies their 2x2 images exactly, removes the abelian phase
/// ζ^{net_r + net_s} and reads the sign of ±identity. Throws NotProperError
/// if the product is not ±identity.
int milnor_c3(const ClosedLink& link, int r, int s);

/// Sum of milnor_c3 over pinned pairs that both cross the walker, mod 2.
int tau(const ClosedLink& link);

/// arf invariant of a proper link, or nullopt if the link is not proper.
/// Handles identity-permutation star links (three-local formula with c1 = 0)
/// and 2-strand braid closures.
std::optional<int> arf(const ClosedLink& link);

/// V_L(i): 0 if not proper, else (√2)^{#(L)-1} (-1)^arf.
BracketValue jones_at_i(const ClosedLink& link);

/// Kauffman bracket by direct sum over all 2^{crossings} smoothings.
BracketValue kauffman_bracket_statesum(const ClosedLink& link, int crossing_cap = 20);

/// (-A^3)^{-writhe} <L>: the Jones value at q = i from the state sum.
BracketValue jones_from_statesum(const ClosedLink& link, int crossing_cap = 20);

}  // namespace anyonwalk
