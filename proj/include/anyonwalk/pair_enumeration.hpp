#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "anyonwalk/braidgen.hpp"
#include "anyonwalk/milnor_table.hpp"

namespace anyonwalk {

/// Crossing statistics of one coin history against the pinned strands,
/// indexed by bond offset k = j - (s0 - t) for generator index j.
struct HistoryData {
  std::uint32_t bits = 0;
  int z_parity = 0;
  /// Crossing count mod 4 per bond, two bits each. Two histories give a
  /// proper link exactly when their signatures agree.
  std::array<std::uint64_t, 2> signature{};
  std::array<std::uint8_t, 2 * CoinHistory::kMaxSteps> crossings{};
  int lo = 0;  ///< first touched bond offset
  int hi = -1; ///< last touched bond offset
};

/// Stripped Milnor group elements of one history for every bond pair
/// lo <= r < s <= hi, stored at (r - lo) * width + (s - lo).
struct StrippedElements {
  int lo = 0;
  int width = 0;
  std::vector<MilnorGroup::Id> ids;

  MilnorGroup::Id at(int r, int s) const {
    return ids[static_cast<std::size_t>((r - lo) * width + (s - lo))];
  }
};

/// One history's share of the pair term. For a proper pair the summand
/// (-1)^{z + arf} equals sign(a) * sign(b) whenever both histories carry the
/// same canonical Milnor classes, which is checked through class_hash.
struct HistoryFactor {
  std::uint32_t bits = 0;
  std::array<std::uint64_t, 2> signature{};
  std::uint64_t class_hash = 0;  ///< hash of the ± classes of all Milnor elements
  int sign = 1;
};

/// Evaluates the summand of the walk density for a pair of coin histories
/// from crossing counts and the Milnor group table, without building links.
class PairEngine {
 public:
  explicit PairEngine(const WalkConfig& cfg);

  const WalkConfig& config() const { return cfg_; }
  int window() const { return cfg_.bond_window(); }

  HistoryData describe(std::uint32_t bits) const;

  /// Bond offsets touched by the bond sequence of `bits`, in time order.
  std::vector<int> bond_sequence(std::uint32_t bits) const;

  HistoryFactor factor(std::uint32_t bits) const;

  StrippedElements stripped(std::uint32_t bits, int lo, int hi) const;
  StrippedElements stripped(const HistoryData& h) const { return stripped(h.bits, 0, window() - 1); }

  static bool proper(const HistoryData& a, const HistoryData& b) { return a.signature == b.signature; }

  /// (-1)^{z + τ} for a proper pair, 0 otherwise.
  int term(const HistoryData& a, const HistoryData& b) const;
  /// Same, with precomputed full-window stripped elements.
  int term(const HistoryData& a, const StrippedElements& ha, const HistoryData& b,
           const StrippedElements& hb) const;

  /// τ of a proper pair, from the group table. Throws ConsistencyError if a
  /// Milnor product is not ±identity or Σc2 is odd.
  int tau_of(const HistoryData& a, const StrippedElements& ha, const HistoryData& b,
             const StrippedElements& hb) const;

 private:
  WalkConfig cfg_;
};

/// Per-signature sums of history signs. Adding two histories with equal
/// signatures but different Milnor classes throws ConsistencyError.
class ClassTally {
 public:
  void add(const HistoryFactor& f);
  void merge(const ClassTally& other);
  /// Σ over classes of (Σ sign)^2: the signed sum over all ordered pairs.
  std::int64_t square_sum() const;
  /// Σ over shared classes of this sum times other's sum.
  std::int64_t cross_sum(const ClassTally& other) const;
  std::int64_t histories() const { return histories_; }
  std::size_t classes() const { return classes_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::array<std::uint64_t, 2>& k) const {
      return static_cast<std::size_t>(k[0] * 0x9E3779B97F4A7C15ull ^ (k[1] + 0x632BE59BD9B4E019ull));
    }
  };
  struct Entry {
    std::uint64_t class_hash = 0;
    std::int64_t sum = 0;
  };
  std::unordered_map<std::array<std::uint64_t, 2>, Entry, KeyHash> classes_;
  std::int64_t histories_ = 0;
};

/// Tally of the given histories, factored in parallel chunks.
ClassTally tally_histories(const PairEngine& engine, const std::vector<std::uint32_t>& bits, int threads);

/// All length-t histories with weight s and a_t = c, in increasing bit order.
std::vector<std::uint32_t> histories_in_stratum(int t, int s, int c);

}  // namespace anyonwalk
