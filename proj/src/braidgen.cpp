#include "anyonwalk/braidgen.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "anyonwalk/errors.hpp"

namespace anyonwalk {

WalkConfig WalkConfig::make(int t, int n, std::optional<int> s0) {
  if (t < 0) throw ConfigError("step count must be non-negative");
  if (t > CoinHistory::kMaxSteps) {
    throw ConfigError("step count " + std::to_string(t) + " exceeds the packed-history limit of " +
                      std::to_string(CoinHistory::kMaxSteps));
  }
  WalkConfig cfg;
  cfg.t = t;
  cfg.n = n > 0 ? n : 2 * t + 2;
  cfg.s0 = s0.value_or((cfg.n + 1) / 2);
  if (2 * cfg.t > cfg.n - 2) {
    throw ConfigError("t=" + std::to_string(t) + " needs n >= 2t+2 (got n=" + std::to_string(cfg.n) +
                      "); the walker would reach the boundary");
  }
  if (cfg.s0 - cfg.t < 1 || cfg.s0 + cfg.t > cfg.n - 1) {
    throw ConfigError("walk from s0=" + std::to_string(cfg.s0) + " leaves sites [1, n-1] within t steps");
  }
  return cfg;
}

CoinHistory::CoinHistory(std::uint32_t bits, int length) : bits_(bits), length_(length) {
  if (length < 0 || length > kMaxSteps) throw ConfigError("coin history length out of range");
  if (length < kMaxSteps && (bits >> length) != 0) throw ConfigError("coin history has bits past its length");
}

CoinHistory CoinHistory::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxSteps)) throw ConfigError("coin history too long");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= 1u << i;
    } else if (text[i] != '0') {
      throw ConfigError("coin history must be a string of 0/1, got '" + std::string(text) + "'");
    }
  }
  return CoinHistory(bits, static_cast<int>(text.size()));
}

int CoinHistory::weight() const { return std::popcount(bits_); }

int CoinHistory::consecutive_right_pairs() const { return std::popcount(bits_ & (bits_ >> 1)); }

std::string CoinHistory::to_string() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int j = 1; j <= length_; ++j) {
    if (bit(j)) out[static_cast<std::size_t>(j - 1)] = '1';
  }
  return out;
}

PathPair::PathPair(CoinHistory a, CoinHistory a_prime) : a_(a), a_prime_(a_prime) {
  if (a.length() != a_prime.length()) throw ConfigError("path pair histories differ in length");
  if (a.weight() != a_prime.weight()) {
    throw ConfigError("path pair violates |a| = |a'| (" + a.to_string() + " vs " + a_prime.to_string() + ")");
  }
  if (a.length() > 0 && a.last() != a_prime.last()) {
    throw ConfigError("path pair violates a_t = a'_t (" + a.to_string() + " vs " + a_prime.to_string() + ")");
  }
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << 'b' << letters[i].index;
    if (letters[i].sign < 0) os << '^';
  }
  return os.str();
}

bool ClosedLink::has_identity_permutation() const {
  for (std::size_t k = 0; k < final_slot.size(); ++k) {
    if (final_slot[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

BraidWord braid_from_history(const CoinHistory& a, const WalkConfig& cfg) {
  if (a.length() != cfg.t) throw ConfigError("coin history length differs from t");
  BraidWord word;
  word.strands = cfg.n;
  word.letters.reserve(static_cast<std::size_t>(cfg.t));
  // Step k applies b_{s0 + a_k + 2 sum_{j<k} a_j - k}.
  int prefix = 0;
  for (int k = 1; k <= cfg.t; ++k) {
    const int index = cfg.s0 + a.bit(k) + 2 * prefix - k;
    if (index < 1 || index > cfg.n - 1) {
      throw ConfigError("generator index " + std::to_string(index) + " out of range; t too large for n");
    }
    word.letters.push_back({index, +1});
    prefix += a.bit(k);
  }
  return word;
}

BraidWord combined_word(const PathPair& pair, const WalkConfig& cfg) {
  BraidWord word = braid_from_history(pair.a(), cfg);
  const BraidWord back = braid_from_history(pair.a_prime(), cfg);
  for (auto it = back.letters.rbegin(); it != back.letters.rend(); ++it) {
    word.letters.push_back({it->index, -it->sign});
  }
  return word;
}

ClosedLink close_link(const BraidWord& word, std::optional<int> walker_slot) {
  ClosedLink link;
  link.word = word;
  const int n = word.strands;
  std::vector<int> slot_content(static_cast<std::size_t>(n) + 1);
  std::iota(slot_content.begin(), slot_content.end(), 0);

  std::vector<int> involvement(static_cast<std::size_t>(n) + 1, 0);
  link.crossings.reserve(word.letters.size());
  for (std::size_t pos = 0; pos < word.letters.size(); ++pos) {
    const BraidLetter& letter = word.letters[pos];
    if (letter.index < 1 || letter.index >= n) {
      throw ConfigError("braid letter index " + std::to_string(letter.index) + " outside [1, " +
                        std::to_string(n - 1) + "]");
    }
    const auto j = static_cast<std::size_t>(letter.index);
    Crossing c;
    c.position = static_cast<int>(pos);
    c.left_strand = slot_content[j];
    c.right_strand = slot_content[j + 1];
    c.sign = letter.sign;
    ++involvement[static_cast<std::size_t>(c.left_strand)];
    ++involvement[static_cast<std::size_t>(c.right_strand)];
    link.crossings.push_back(c);
    std::swap(slot_content[j], slot_content[j + 1]);
  }

  link.final_slot.assign(static_cast<std::size_t>(n), 0);
  for (int slot = 1; slot <= n; ++slot) {
    link.final_slot[static_cast<std::size_t>(slot_content[static_cast<std::size_t>(slot)] - 1)] = slot;
  }

  // Strand k ends in slot f(k) and the closure continues it as strand f(k).
  link.component.assign(static_cast<std::size_t>(n), -1);
  for (int k = 1; k <= n; ++k) {
    if (link.component[static_cast<std::size_t>(k - 1)] >= 0) continue;
    int cur = k;
    while (link.component[static_cast<std::size_t>(cur - 1)] < 0) {
      link.component[static_cast<std::size_t>(cur - 1)] = link.num_components;
      cur = link.final_slot[static_cast<std::size_t>(cur - 1)];
    }
    ++link.num_components;
  }

  if (walker_slot) {
    if (*walker_slot < 1 || *walker_slot > n) throw ConfigError("walker slot out of range");
    link.walker = *walker_slot;
  } else if (!link.crossings.empty()) {
    const auto total = static_cast<int>(link.crossings.size());
    for (int k = 1; k <= n; ++k) {
      if (involvement[static_cast<std::size_t>(k)] == total) {
        link.walker = k;
        break;
      }
    }
  }
  return link;
}

ClosedLink walk_link(const PathPair& pair, const WalkConfig& cfg) {
  return close_link(combined_word(pair, cfg), cfg.s0);
}

}  // namespace anyonwalk
