#include "anyonwalk/pair_enumeration.hpp"

#include <algorithm>
#include <bit>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/linkinv.hpp"
#include "anyonwalk/parallel.hpp"

namespace anyonwalk {

PairEngine::PairEngine(const WalkConfig& cfg) : cfg_(cfg) {}

std::vector<int> PairEngine::bond_sequence(std::uint32_t bits) const {
  std::vector<int> bonds;
  bonds.reserve(static_cast<std::size_t>(cfg_.t));
  // Walker offset relative to the window: slot s0 sits at offset t.
  int pos = cfg_.t;
  for (int k = 0; k < cfg_.t; ++k) {
    if ((bits >> k) & 1u) {
      bonds.push_back(pos);
      ++pos;
    } else {
      bonds.push_back(pos - 1);
      --pos;
    }
  }
  return bonds;
}

HistoryData PairEngine::describe(std::uint32_t bits) const {
  HistoryData h;
  h.bits = bits;
  h.z_parity = std::popcount(bits & (bits >> 1)) & 1;
  h.lo = window();
  h.hi = -1;
  for (int b : bond_sequence(bits)) {
    ++h.crossings[static_cast<std::size_t>(b)];
    h.lo = std::min(h.lo, b);
    h.hi = std::max(h.hi, b);
  }
  for (int b = 0; b < window(); ++b) {
    const std::uint64_t v = h.crossings[static_cast<std::size_t>(b)] & 3u;
    h.signature[static_cast<std::size_t>(b / 32)] |= v << (2 * (b % 32));
  }
  if (h.hi < 0) h.lo = 0;
  return h;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

HistoryFactor PairEngine::factor(std::uint32_t bits) const {
  const MilnorGroup& group = MilnorGroup::instance();
  const HistoryData h = describe(bits);
  const int w = window();
  const MilnorGroup::Id trivial = group.canonical(group.identity());
  HistoryFactor out;
  out.bits = bits;
  out.signature = h.signature;
  // c2 parity of a proper pair is Σ_j (cnt_a - cnt_b)/4, which splits as floor(cnt/4).
  int parity = h.z_parity;
  for (int j = 0; j < w; ++j) parity ^= (h.crossings[static_cast<std::size_t>(j)] >> 2) & 1;
  std::uint64_t hash = 0;
  auto visit = [&](int r, int s, MilnorGroup::Id g) {
    parity ^= group.flipped(g) ? 1 : 0;
    const MilnorGroup::Id c = group.canonical(g);
    if (c != trivial) hash += mix((static_cast<std::uint64_t>(r * 64 + s) << 16) | c);
  };
  if (h.hi >= 0) {
    // Rows left of the touched span only ever see right multiplications.
    std::array<MilnorGroup::Id, 2 * CoinHistory::kMaxSteps> row{};
    for (int s = h.lo; s <= h.hi; ++s) {
      MilnorGroup::Id g = group.identity();
      for (int k = 0; k < h.crossings[static_cast<std::size_t>(s)]; ++k) g = group.left_multiply(g, 1, +1);
      row[static_cast<std::size_t>(s)] = g;
    }
    for (int r = 0; r < h.lo; ++r) {
      for (int s = h.lo; s <= h.hi; ++s) visit(r, s, row[static_cast<std::size_t>(s)]);
    }
    const std::vector<int> bonds = bond_sequence(bits);
    for (int r = h.lo; r <= h.hi; ++r) {
      std::fill(row.begin() + r + 1, row.begin() + w, group.identity());
      for (int b : bonds) {
        if (b == r) {
          for (int s = r + 1; s < w; ++s) row[static_cast<std::size_t>(s)] = group.left_multiply(row[static_cast<std::size_t>(s)], 0, +1);
        } else if (b > r) {
          row[static_cast<std::size_t>(b)] = group.left_multiply(row[static_cast<std::size_t>(b)], 1, +1);
        }
      }
      for (int s = r + 1; s < w; ++s) visit(r, s, row[static_cast<std::size_t>(s)]);
    }
  }
  out.class_hash = hash;
  out.sign = parity ? -1 : 1;
  return out;
}

StrippedElements PairEngine::stripped(std::uint32_t bits, int lo, int hi) const {
  const MilnorGroup& group = MilnorGroup::instance();
  StrippedElements out;
  out.lo = lo;
  out.width = std::max(0, hi - lo + 1);
  out.ids.assign(static_cast<std::size_t>(out.width * out.width), group.identity());
  const std::vector<int> bonds = bond_sequence(bits);
  // For a fixed left strand r, one pass updates every (r, s) product.
  for (int r = lo; r <= hi; ++r) {
    auto* row = out.ids.data() + static_cast<std::ptrdiff_t>((r - lo) * out.width);
    for (int b : bonds) {
      if (b == r) {
        for (int s = r + 1; s <= hi; ++s) row[s - lo] = group.left_multiply(row[s - lo], 0, +1);
      } else if (b > r && b <= hi) {
        row[b - lo] = group.left_multiply(row[b - lo], 1, +1);
      }
    }
  }
  return out;
}

int PairEngine::tau_of(const HistoryData& a, const StrippedElements& ha, const HistoryData& b,
                       const StrippedElements& hb) const {
  const MilnorGroup& group = MilnorGroup::instance();
  const int lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.hi, b.hi);
  std::int64_t c2_sum = 0;
  for (int j = lo; j <= hi; ++j) {
    const int lk = (static_cast<int>(a.crossings[static_cast<std::size_t>(j)]) -
                    static_cast<int>(b.crossings[static_cast<std::size_t>(j)])) / 2;
    c2_sum += c2_pair(lk);
  }
  if (c2_sum % 2 != 0) throw ConsistencyError("odd pairwise c2 sum on a proper walk link");
  int tau = 0;
  for (int r = lo; r <= hi; ++r) {
    for (int s = r + 1; s <= hi; ++s) {
      const MilnorGroup::Id x = ha.at(r, s);
      const MilnorGroup::Id y = hb.at(r, s);
      if (x == y) continue;
      if (x == group.negate(y)) {
        tau ^= 1;
        continue;
      }
      throw ConsistencyError("Milnor product is not ±identity on a pair with equal crossing signatures");
    }
  }
  return tau;
}

int PairEngine::term(const HistoryData& a, const StrippedElements& ha, const HistoryData& b,
                     const StrippedElements& hb) const {
  if (!proper(a, b)) return 0;
  const int parity = a.z_parity ^ b.z_parity ^ tau_of(a, ha, b, hb);
  return parity ? -1 : 1;
}

int PairEngine::term(const HistoryData& a, const HistoryData& b) const {
  if (!proper(a, b)) return 0;
  const int lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.hi, b.hi);
  return term(a, stripped(a.bits, lo, hi), b, stripped(b.bits, lo, hi));
}

void ClassTally::add(const HistoryFactor& f) {
  auto [it, fresh] = classes_.try_emplace(f.signature, Entry{f.class_hash, 0});
  if (!fresh && it->second.class_hash != f.class_hash) {
    throw ConsistencyError("histories with equal crossing signatures carry different Milnor classes");
  }
  it->second.sum += f.sign;
  ++histories_;
}

void ClassTally::merge(const ClassTally& other) {
  for (const auto& [key, e] : other.classes_) {
    auto [it, fresh] = classes_.try_emplace(key, e);
    if (fresh) continue;
    if (it->second.class_hash != e.class_hash) {
      throw ConsistencyError("histories with equal crossing signatures carry different Milnor classes");
    }
    it->second.sum += e.sum;
  }
  histories_ += other.histories_;
}

std::int64_t ClassTally::square_sum() const {
  std::int64_t total = 0;
  for (const auto& [key, e] : classes_) total += e.sum * e.sum;
  return total;
}

namespace {
constexpr std::size_t kFactorChunk = 4096;
}

ClassTally tally_histories(const PairEngine& engine, const std::vector<std::uint32_t>& bits, int threads) {
  const std::size_t tasks = (bits.size() + kFactorChunk - 1) / kFactorChunk;
  std::vector<ClassTally> partial(tasks);
  parallel_for(tasks, threads, [&](std::size_t k) {
    const std::size_t end = std::min(bits.size(), (k + 1) * kFactorChunk);
    for (std::size_t i = k * kFactorChunk; i < end; ++i) partial[k].add(engine.factor(bits[i]));
  });
  ClassTally out;
  for (const ClassTally& p : partial) out.merge(p);
  return out;
}

std::int64_t ClassTally::cross_sum(const ClassTally& other) const {
  const ClassTally& small = classes_.size() <= other.classes_.size() ? *this : other;
  const ClassTally& large = &small == this ? other : *this;
  std::int64_t total = 0;
  for (const auto& [key, e] : small.classes_) {
    if (auto it = large.classes_.find(key); it != large.classes_.end()) total += e.sum * it->second.sum;
  }
  return total;
}

std::vector<std::uint32_t> histories_in_stratum(int t, int s, int c) {
  std::vector<std::uint32_t> out;
  if (t <= 0 || s < c || s - c > t - 1 || c < 0 || c > 1) return out;
  const int k = s - c;
  const int m = t - 1;
  const std::uint32_t last = c ? (1u << (t - 1)) : 0u;
  if (k == 0) {
    out.push_back(last);
    return out;
  }
  // Gosper's hack over the first t-1 bits.
  std::uint32_t v = (1u << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (v < limit) {
    out.push_back(v | last);
    const std::uint32_t lowest = v & (~v + 1);
    const std::uint64_t ripple = std::uint64_t{v} + lowest;
    if (ripple >= limit) break;
    v = static_cast<std::uint32_t>(((ripple ^ v) >> 2) / lowest) | static_cast<std::uint32_t>(ripple);
  }
  return out;
}

}  // namespace anyonwalk
