#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "anyonwalk/bigint.hpp"
#include "anyonwalk/braidgen.hpp"

namespace anyonwalk {

enum class DistKind { AnyonicExact, AnyonicMC, Quantum, Classical, Bound };

std::string_view to_string(DistKind kind);

/// Walker position distribution after t steps.
///
/// Entries are indexed by the right-move count s = 0..t; the physical
/// position is x = 2s - t + s0 (see position()). Exact kinds also carry
/// integer numerators over the common denominator 2^t.
struct Distribution {
  int t = 0;
  int s0 = 0;
  DistKind kind = DistKind::Classical;
  std::vector<double> weights;
  std::vector<BigInt> numerators;  ///< empty unless exact
  std::vector<double> std_errors;  ///< MC kinds only

  int position(int s) const { return 2 * s - t + s0; }
  bool is_exact() const { return !numerators.empty(); }
  /// Weight at physical position x, 0 off the support.
  double at_position(int x) const;
  // Sum of numerators; 2^t when normalized.
  BigInt numerator_sum() const;
  double total() const;

  static Distribution from_numerators(int t, int s0, DistKind kind, std::vector<BigInt> numerators);
};

enum class TraceMode {
  Invariants,   ///< (-1)^{z+τ} on proper links, 0 otherwise
  StubTrivial,  ///< every pair contributes (-1)^z, i.e. <L> replaced by d^{n-1}
};

struct ExactOptions {
  int cap = 14;
  int threads = 0;  ///< 0: default_thread_count()
  TraceMode mode = TraceMode::Invariants;
};

/// Parity of the number of consecutive right-move pairs in a and a'.
int coin_parity_z(const PathPair& pair);

/// Exact anyonic distribution. Proper pairs share a crossing signature and
/// their term splits into per-history signs, so each stratum costs one pass
/// over its histories. Throws CapExceeded above options.cap.
Distribution anyonic_distribution_exact(const WalkConfig& cfg, const ExactOptions& options = {});

/// Same distribution by evaluating every proper pair separately; slow,
/// kept as an independent check of the factorized sum.
Distribution anyonic_distribution_pairwise(const WalkConfig& cfg, const ExactOptions& options = {});

/// Stratified Monte Carlo record: one entry per (s, c) stratum.
struct MCStratum {
  int s = 0;
  int last_bit = 0;
  std::uint64_t histories = 0;      ///< C(t-1, s-c)
  double non_mirror_pairs = 0;      ///< histories^2 - histories
  std::uint64_t samples = 0;        ///< histories drawn
  int batches = 0;
  bool exhaustive = false;
  double pair_mean = 0;             ///< mean term over sampled non-mirror pairs
  double estimate = 0;              ///< estimated Σ over non-mirror pairs
  double std_error = 0;
};

struct MCEstimate {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::vector<MCStratum> strata;
};

struct MCOptions {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int threads = 0;
  /// Independently seeded batches per stratum; their spread gives the error bar.
  int batches = 16;
  /// Strata with at most this many histories are summed exactly (when samples > 0).
  std::uint64_t exhaustive_histories = std::uint64_t{1} << 17;
};

struct MCResult {
  Distribution distribution;
  MCEstimate estimate;
};

/// Stratified MC estimate: mirror pairs added exactly, non-mirror pairs
/// sampled uniformly inside each (s, a_t) stratum with allocation
/// proportional to the stratum's non-mirror pair count. Each stratum draws
/// histories and averages the term over every pair of distinct draws.
/// Deterministic per (seed, samples, batches).
MCResult anyonic_distribution_mc(const WalkConfig& cfg, const MCOptions& options);

/// Hadamard walk, coin 0 moves left, initial coin |0>; exact dyadic.
Distribution hadamard_qw(const WalkConfig& cfg);

/// Binomial C(t, s)/2^t.
Distribution classical_rw(const WalkConfig& cfg);

/// Asymptotic Hadamard-walk density (1-α)/(π(1-α²)√(1-2α²)) on
/// |α| < 1/√2, 0 outside. Under this walk's chirality (drift to the left)
/// it describes α = (x - s0)/t.
double asymptotic_qw_density(double alpha);

struct WalkStats {
  double mean = 0;      ///< ⟨x⟩
  double variance = 0;  ///< ⟨x²⟩ - ⟨x⟩²
  std::vector<double> tv_distances;
};

/// Mean and variance over positions, total-variation distance to each ref.
WalkStats stats(const Distribution& d, const std::vector<Distribution>& refs = {});

double total_variation(const Distribution& p, const Distribution& f);

struct BoundingPair {
  Distribution upper;  ///< p_RW + p_prop (p_QW - p_RW)
  Distribution lower;  ///< p_RW + p_prop (δ_{s0} - p_RW)
  bool clamped = false;
};

/// Bounding distributions from per-s proper densities (index s = 0..t).
BoundingPair bounding_distributions(const WalkConfig& cfg, const std::vector<double>& p_prop);

}  // namespace anyonwalk
