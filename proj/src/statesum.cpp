#include <array>
#include <cstdint>
#include <vector>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/linkinv.hpp"

namespace anyonwalk {

namespace {

constexpr int kMaxStrands = 64;

// Partial Temperley-Lieb diagram of the smoothed braid read up to some letter:
// points 0..n-1 are the bottom endpoints, n..2n-1 the current top endpoints.
struct Diagram {
  std::array<std::uint8_t, 2 * kMaxStrands> partner{};
  int closed_loops = 0;
};

class StateSum {
 public:
  StateSum(const BraidWord& word) : word_(word), n_(word.strands) {
    const std::size_t max_loops = static_cast<std::size_t>(n_) + word.letters.size() + 1;
    histogram_.assign(16, std::vector<std::uint64_t>(max_loops + 1, 0));
  }

  BracketValue run() {
    Diagram d;
    for (int p = 0; p < n_; ++p) {
      d.partner[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(n_ + p);
      d.partner[static_cast<std::size_t>(n_ + p)] = static_cast<std::uint8_t>(p);
    }
    visit(d, 0, 0);
    BracketValue sum;
    for (int e = 0; e < 16; ++e) {
      for (std::size_t loops = 1; loops < histogram_[static_cast<std::size_t>(e)].size(); ++loops) {
        const std::uint64_t count = histogram_[static_cast<std::size_t>(e)][loops];
        if (count == 0) continue;
        sum += CycScalar::integer(static_cast<std::int64_t>(count)) *
               CycScalar::zeta(kBracketAZetaPower * e) * CycScalar::sqrt2_pow(static_cast<int>(loops) - 1);
      }
    }
    return sum;
  }

 private:
  // A-exponent is tracked mod 16, enough for A = ζ^3.
  void visit(const Diagram& d, std::size_t pos, int a_exp) {
    if (pos == word_.letters.size()) {
      record(d, a_exp);
      return;
    }
    const BraidLetter& letter = word_.letters[pos];
    // b = A·1 + A^{-1}·e ; b^{-1} = A^{-1}·1 + A·e.
    visit(d, pos + 1, (a_exp + letter.sign + 16) % 16);
    Diagram cup = d;
    apply_cup_cap(cup, letter.index - 1);
    visit(cup, pos + 1, (a_exp - letter.sign + 16) % 16);
  }

  void apply_cup_cap(Diagram& d, int j) const {
    const auto u = static_cast<std::size_t>(n_ + j);
    const auto v = u + 1;
    if (d.partner[u] == v) {
      ++d.closed_loops;
    } else {
      const std::uint8_t x = d.partner[u];
      const std::uint8_t y = d.partner[v];
      d.partner[x] = y;
      d.partner[y] = x;
    }
    d.partner[u] = static_cast<std::uint8_t>(v);
    d.partner[v] = static_cast<std::uint8_t>(u);
  }

  // Markov closure joins bottom p with top p; count the resulting cycles.
  void record(const Diagram& d, int a_exp) {
    std::array<bool, 2 * kMaxStrands> seen{};
    int loops = d.closed_loops;
    for (int start = 0; start < n_; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++loops;
      int p = start;
      do {
        seen[static_cast<std::size_t>(p)] = true;
        const int q = d.partner[static_cast<std::size_t>(p)];
        seen[static_cast<std::size_t>(q)] = true;
        p = q < n_ ? q + n_ : q - n_;
      } while (p != start);
    }
    ++histogram_[static_cast<std::size_t>(a_exp)][static_cast<std::size_t>(loops)];
  }

  const BraidWord& word_;
  int n_;
  std::vector<std::vector<std::uint64_t>> histogram_;
};

}  // namespace

BracketValue kauffman_bracket_statesum(const ClosedLink& link, int crossing_cap) {
  const auto crossings = static_cast<int>(link.word.letters.size());
  if (crossings > crossing_cap) {
    throw CapExceeded("state sum over " + std::to_string(crossings) + " crossings exceeds the cap of " +
                      std::to_string(crossing_cap));
  }
  if (link.word.strands > kMaxStrands) throw CapExceeded("state sum supports at most 64 strands");
  if (link.word.strands <= 0) return BracketValue{};
  return StateSum(link.word).run();
}

}  // namespace anyonwalk
