#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "anyonwalk/bigint.hpp"
#include "anyonwalk/braidgen.hpp"

namespace anyonwalk {

/// Half-path counts on the (n-1) x n lattice for t = 2n steps ending at s0.
struct LatticePathCounts {
  int n = 0;
  BigInt all;                 ///< C(2n-1, n-1)
  std::vector<BigInt> touch;  ///< touch[w-1] = #(w) = C(2n-1, n-w), w = 1..n
  std::vector<BigInt> pw;     ///< pw[w-1] = |P_w| = #(w) - #(w+1)

  /// |P_w| from the closed form (w/n) C(2n, n-w); nullopt if not integral.
  std::optional<BigInt> pw_closed_form(int w) const;
};

LatticePathCounts lattice_counts(int n);

enum class Method { Exact, MonteCarlo };

struct ProperDensity {
  int t = 0;
  int s = 0;
  Method method = Method::Exact;
  bool empty = false;          ///< no non-mirror pairs in this stratum
  double value = 0;
  double std_error = 0;
  double proper_pairs = 0;     ///< exact count, or proper samples for MC
  double total_pairs = 0;      ///< non-mirror pairs, or samples for MC
};

struct ProperOptions {
  Method method = Method::Exact;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int cap = 14;
  int threads = 0;
};

/// Fraction of non-mirror valid pairs with s right moves whose link is proper.
ProperDensity proper_density(const WalkConfig& cfg, int s, const ProperOptions& options = {});

struct ParityProbs {
  int t = 0;
  int s = 0;
  std::uint64_t samples = 0;
  /// Per pinned component (generator index j): pairs touching j and how many
  /// of those give an even linking number.
  std::vector<int> component;
  std::vector<std::uint64_t> touched;
  std::vector<std::uint64_t> even;
  std::vector<double> p_even;
  double rho = 0;
  double rho_std_error = 0;
  /// Correlation of the even-parity indicators of neighbouring components
  /// (j, j+1) over pairs touching both; NaN where undefined.
  std::vector<double> neighbour_correlation;
};

/// p_e(t, j) = P(lk(L_w, L_j) even | pair crosses L_j) over uniformly sampled
/// non-mirror pairs with s right moves; rho is the max over components
/// touched often enough to be estimated (>= max(100, samples/100) pairs).
ParityProbs parity_probs(const WalkConfig& cfg, int s, std::uint64_t samples, std::uint64_t seed, int threads = 0);

/// (96/5) ρ(1+4ρ+ρ²)/(1-ρ)⁴ / t².
double analytic_bound(double rho, int t);

}  // namespace anyonwalk
