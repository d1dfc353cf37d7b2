#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace anyonwalk {

/// Step count, strand count and initial site of one walk.
///
/// The walker at site s occupies strand slot s; generator b_j acts on slots
/// (j, j+1). A walk of t steps from s0 touches slots s0-t .. s0+t, and
/// configurations that could reach the boundary are rejected rather than
/// wrapped.
struct WalkConfig {
  int t = 0;
  int n = 2;
  int s0 = 1;

  /// Validating factory. n <= 0 selects the default n = 2t+2; s0 defaults to
  /// ceil(n/2).
  static WalkConfig make(int t, int n = 0, std::optional<int> s0 = std::nullopt);

  /// Number of generator indices a walk of this config can touch (2t).
  int bond_window() const { return 2 * t; }
  /// Smallest generator index a walk can apply (s0 - t).
  int first_bond() const { return s0 - t; }
  /// Physical position after s right moves.
  int position(int s) const { return 2 * s - t + s0; }
};

/// Coin outcomes a_1..a_t packed one bit per step; bit (j-1) holds a_j and
/// 1 means a right move.
class CoinHistory {
 public:
  static constexpr int kMaxSteps = 32;

  CoinHistory() = default;
  CoinHistory(std::uint32_t bits, int length);
  /// Parses "10011" with a_1 first.
  static CoinHistory parse(std::string_view text);

  int length() const { return length_; }
  std::uint32_t bits() const { return bits_; }
  int bit(int j) const { return static_cast<int>((bits_ >> (j - 1)) & 1u); }  // 1-based
  int weight() const;
  int last() const { return bit(length_); }
  /// Number of j with a_j = a_{j+1} = 1.
  int consecutive_right_pairs() const;
  std::string to_string() const;

  bool operator==(const CoinHistory&) const = default;

 private:
  std::uint32_t bits_ = 0;
  int length_ = 0;
};

/// Forward/backward coin histories contributing to a diagonal element of the
/// spatial density: equal weight and equal final coin.
class PathPair {
 public:
  PathPair(CoinHistory a, CoinHistory a_prime);

  const CoinHistory& a() const { return a_; }
  const CoinHistory& a_prime() const { return a_prime_; }
  bool is_mirror() const { return a_ == a_prime_; }

 private:
  CoinHistory a_;
  CoinHistory a_prime_;
};

struct BraidLetter {
  int index = 1;  ///< generator index j, acts on slots (j, j+1)
  int sign = 1;   ///< +1 for b_j, -1 for b_j^dagger

  bool operator==(const BraidLetter&) const = default;
};

/// Letters in time order: the first element is applied first.
struct BraidWord {
  std::vector<BraidLetter> letters;
  int strands = 0;

  bool operator==(const BraidWord&) const = default;
  std::string to_string() const;
};

struct Crossing {
  int position = 0;    ///< letter index in the word
  int left_strand = 0;  ///< strand id in slot j before the letter
  int right_strand = 0; ///< strand id in slot j+1 before the letter
  int sign = 1;
};

/// Markov closure of a braid word. Strand ids are the 1-based starting slots.
struct ClosedLink {
  BraidWord word;
  /// final_slot[k-1]: slot where strand k ends.
  std::vector<int> final_slot;
  /// component[k-1]: component id (0-based) of strand k.
  std::vector<int> component;
  int num_components = 0;
  /// Strand id of the walker, when one strand takes part in every crossing
  /// (or the caller named it).
  std::optional<int> walker;
  std::vector<Crossing> crossings;

  bool has_identity_permutation() const;
};

BraidWord braid_from_history(const CoinHistory& a, const WalkConfig& cfg);

/// Word of B_{a'}^dagger B_a in time order: B_a, then B_{a'} reversed with
/// every sign flipped.
BraidWord combined_word(const PathPair& pair, const WalkConfig& cfg);

/// Closes a word. `walker_slot` names the walker's starting slot; otherwise
/// the walker is inferred as the strand common to every crossing.
ClosedLink close_link(const BraidWord& word, std::optional<int> walker_slot = std::nullopt);

/// Convenience: close_link(combined_word(pair, cfg), cfg.s0).
ClosedLink walk_link(const PathPair& pair, const WalkConfig& cfg);

}  // namespace anyonwalk
