#include "anyonwalk/walkdist.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/pair_enumeration.hpp"
#include "anyonwalk/parallel.hpp"

namespace anyonwalk {

std::string_view to_string(DistKind kind) {
  switch (kind) {
    case DistKind::AnyonicExact: return "anyonic-exact";
    case DistKind::AnyonicMC: return "anyonic-mc";
    case DistKind::Quantum: return "quantum";
    case DistKind::Classical: return "classical";
    case DistKind::Bound: return "bound";
  }
  return "unknown";
}

double Distribution::at_position(int x) const {
  const int twice = x - s0 + t;
  if (twice < 0 || twice % 2 != 0 || twice / 2 > t) return 0.0;
  return weights[static_cast<std::size_t>(twice / 2)];
}

BigInt Distribution::numerator_sum() const {
  BigInt sum = 0;
  for (const auto& v : numerators) sum += v;
  return sum;
}

double Distribution::total() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

Distribution Distribution::from_numerators(int t, int s0, DistKind kind, std::vector<BigInt> numerators) {
  Distribution d;
  d.t = t;
  d.s0 = s0;
  d.kind = kind;
  const double scale = std::ldexp(1.0, -t);
  d.weights.reserve(numerators.size());
  for (const auto& v : numerators) d.weights.push_back(v.convert_to<double>() * scale);
  d.numerators = std::move(numerators);
  return d;
}

int coin_parity_z(const PathPair& pair) {
  return (pair.a().consecutive_right_pairs() + pair.a_prime().consecutive_right_pairs()) % 2;
}

namespace {

struct Stratum {
  int s = 0;
  int c = 0;
  std::vector<HistoryData> histories;        // sorted by signature
  std::vector<StrippedElements> stripped;    // parallel to histories (Invariants mode)
  std::vector<std::size_t> group_end;        // end index of each history's signature group
};

constexpr std::size_t kChunk = 64;

}  // namespace

namespace {

void check_cap(const WalkConfig& cfg, const ExactOptions& options) {
  if (cfg.t > options.cap) {
    throw CapExceeded("exact enumeration is capped at t=" + std::to_string(options.cap) + " (asked t=" +
                      std::to_string(cfg.t) + "); use the Monte Carlo method");
  }
}

}  // namespace

Distribution anyonic_distribution_exact(const WalkConfig& cfg, const ExactOptions& options) {
  check_cap(cfg, options);
  const int threads = options.threads > 0 ? options.threads : default_thread_count();
  if (cfg.t == 0) return Distribution::from_numerators(0, cfg.s0, DistKind::AnyonicExact, {BigInt(1)});

  const PairEngine engine(cfg);
  std::vector<BigInt> numerators(static_cast<std::size_t>(cfg.t) + 1, BigInt(0));
  for (int s = 0; s <= cfg.t; ++s) {
    for (int c = 0; c <= 1; ++c) {
      const std::vector<std::uint32_t> bits = histories_in_stratum(cfg.t, s, c);
      if (bits.empty()) continue;
      BigInt& target = numerators[static_cast<std::size_t>(s)];
      if (options.mode == TraceMode::StubTrivial) {
        std::int64_t sum = 0;
        for (std::uint32_t b : bits) sum += (std::popcount(b & (b >> 1)) & 1) ? -1 : 1;
        target += BigInt(sum) * sum;
        continue;
      }
      target += tally_histories(engine, bits, threads).square_sum();
    }
  }
  return Distribution::from_numerators(cfg.t, cfg.s0, DistKind::AnyonicExact, std::move(numerators));
}

Distribution anyonic_distribution_pairwise(const WalkConfig& cfg, const ExactOptions& options) {
  check_cap(cfg, options);
  const int threads = options.threads > 0 ? options.threads : default_thread_count();
  if (cfg.t == 0) return Distribution::from_numerators(0, cfg.s0, DistKind::AnyonicExact, {BigInt(1)});

  const PairEngine engine(cfg);
  std::vector<Stratum> strata;
  for (int s = 0; s <= cfg.t; ++s) {
    for (int c = 0; c <= 1; ++c) {
      if (!histories_in_stratum(cfg.t, s, c).empty()) strata.push_back({s, c, {}, {}, {}});
    }
  }

  parallel_for(strata.size(), threads, [&](std::size_t i) {
    Stratum& st = strata[i];
    for (std::uint32_t bits : histories_in_stratum(cfg.t, st.s, st.c)) st.histories.push_back(engine.describe(bits));
    std::stable_sort(st.histories.begin(), st.histories.end(),
                     [](const HistoryData& x, const HistoryData& y) { return x.signature < y.signature; });
    st.group_end.resize(st.histories.size());
    for (std::size_t k = st.histories.size(); k-- > 0;) {
      const bool last = k + 1 == st.histories.size() || st.histories[k + 1].signature != st.histories[k].signature;
      st.group_end[k] = last ? k + 1 : st.group_end[k + 1];
    }
    if (options.mode == TraceMode::Invariants) {
      st.stripped.reserve(st.histories.size());
      for (const HistoryData& h : st.histories) st.stripped.push_back(engine.stripped(h));
    }
  });

  struct Task {
    std::size_t stratum;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::size_t size = strata[i].histories.size();
    for (std::size_t b = 0; b < size; b += kChunk) tasks.push_back({i, b, std::min(size, b + kChunk)});
  }
  std::vector<std::int64_t> partial(tasks.size(), 0);

  parallel_for(tasks.size(), threads, [&](std::size_t k) {
    const Task& task = tasks[k];
    const Stratum& st = strata[task.stratum];
    std::int64_t sum = 0;
    for (std::size_t i = task.begin; i < task.end; ++i) {
      const HistoryData& a = st.histories[i];
      if (options.mode == TraceMode::StubTrivial) {
        for (const HistoryData& b : st.histories) sum += (a.z_parity ^ b.z_parity) ? -1 : 1;
        continue;
      }
      // Proper partners share the signature: scan a's group only.
      std::size_t first = i;
      while (first > 0 && st.histories[first - 1].signature == a.signature) --first;
      for (std::size_t j = first; j < st.group_end[i]; ++j) {
        sum += engine.term(a, st.stripped[i], st.histories[j], st.stripped[j]);
      }
    }
    partial[k] = sum;
  });

  std::vector<BigInt> numerators(static_cast<std::size_t>(cfg.t) + 1, BigInt(0));
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    numerators[static_cast<std::size_t>(strata[tasks[k].stratum].s)] += partial[k];
  }
  return Distribution::from_numerators(cfg.t, cfg.s0, DistKind::AnyonicExact, std::move(numerators));
}

Distribution hadamard_qw(const WalkConfig& cfg) {
  // Unnormalized amplitudes with U = [[1,1],[1,-1]] stay integral; the
  // probability of (x, coin) is amp^2 / 2^t.
  const int t = cfg.t;
  const auto width = static_cast<std::size_t>(2 * t + 1);
  std::vector<BigInt> left(width, 0), right(width, 0);  // coin 0 / coin 1 at offset x - s0 + t
  left[static_cast<std::size_t>(t)] = 1;
  for (int step = 0; step < t; ++step) {
    std::vector<BigInt> nl(width, 0), nr(width, 0);
    for (std::size_t x = 0; x < width; ++x) {
      if (left[x] == 0 && right[x] == 0) continue;
      const BigInt up = left[x] + right[x];    // coin 0 after U
      const BigInt down = left[x] - right[x];  // coin 1 after U
      if (up != 0) nl[x - 1] += up;
      if (down != 0) nr[x + 1] += down;
    }
    left = std::move(nl);
    right = std::move(nr);
  }
  std::vector<BigInt> numerators(static_cast<std::size_t>(t) + 1, 0);
  for (int s = 0; s <= t; ++s) {
    const auto x = static_cast<std::size_t>(2 * s);
    numerators[static_cast<std::size_t>(s)] = left[x] * left[x] + right[x] * right[x];
  }
  return Distribution::from_numerators(t, cfg.s0, DistKind::Quantum, std::move(numerators));
}

Distribution classical_rw(const WalkConfig& cfg) {
  std::vector<BigInt> numerators;
  numerators.reserve(static_cast<std::size_t>(cfg.t) + 1);
  for (int s = 0; s <= cfg.t; ++s) numerators.push_back(binomial(cfg.t, s));
  return Distribution::from_numerators(cfg.t, cfg.s0, DistKind::Classical, std::move(numerators));
}

double asymptotic_qw_density(double alpha) {
  const double edge = 1.0 - 2.0 * alpha * alpha;
  if (edge <= 0.0) return 0.0;
  return (1.0 - alpha) / (std::numbers::pi * (1.0 - alpha * alpha) * std::sqrt(edge));
}

double total_variation(const Distribution& p, const Distribution& f) {
  if (p.t != f.t || p.s0 != f.s0) throw ConfigError("total variation needs matching t and s0");
  if (p.is_exact() && f.is_exact()) {
    BigInt sum = 0;
    for (std::size_t s = 0; s < p.numerators.size(); ++s) sum += abs(p.numerators[s] - f.numerators[s]);
    return std::ldexp(sum.convert_to<double>(), -p.t - 1);
  }
  double sum = 0;
  for (std::size_t s = 0; s < p.weights.size(); ++s) sum += std::abs(p.weights[s] - f.weights[s]);
  return 0.5 * sum;
}

WalkStats stats(const Distribution& d, const std::vector<Distribution>& refs) {
  WalkStats out;
  double m1 = 0, m2 = 0;
  for (int s = 0; s <= d.t; ++s) {
    const double w = d.weights[static_cast<std::size_t>(s)];
    const double x = d.position(s) - d.s0;
    m1 += w * x;
    m2 += w * x * x;
  }
  out.mean = d.s0 + m1;
  out.variance = m2 - m1 * m1;
  for (const Distribution& r : refs) out.tv_distances.push_back(total_variation(d, r));
  return out;
}

BoundingPair bounding_distributions(const WalkConfig& cfg, const std::vector<double>& p_prop) {
  if (p_prop.size() != static_cast<std::size_t>(cfg.t) + 1) {
    throw ConfigError("p_prop needs one entry per right-move count 0..t");
  }
  for (double v : p_prop) {
    if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("p_prop values must lie in [0, 1]");
  }
  const Distribution qw = hadamard_qw(cfg);
  const Distribution rw = classical_rw(cfg);
  BoundingPair out;
  auto make = [&](auto&& reference) {
    Distribution d;
    d.t = cfg.t;
    d.s0 = cfg.s0;
    d.kind = DistKind::Bound;
    for (int s = 0; s <= cfg.t; ++s) {
      const auto i = static_cast<std::size_t>(s);
      double v = rw.weights[i] + p_prop[i] * (reference(s) - rw.weights[i]);
      if (v < 0.0) {
        v = 0.0;
        out.clamped = true;
      }
      d.weights.push_back(v);
    }
    return d;
  };
  out.upper = make([&](int s) { return qw.weights[static_cast<std::size_t>(s)]; });
  out.lower = make([&](int s) { return cfg.position(s) == cfg.s0 ? 1.0 : 0.0; });
  return out;
}

}  // namespace anyonwalk
