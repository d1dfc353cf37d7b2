#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/pair_enumeration.hpp"
#include "anyonwalk/parallel.hpp"
#include "anyonwalk/sampling.hpp"
#include "anyonwalk/walkdist.hpp"

namespace anyonwalk {

std::mt19937_64 make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (std::uint64_t tag : tags) {
    words.push_back(static_cast<std::uint32_t>(tag));
    words.push_back(static_cast<std::uint32_t>(tag >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

std::uint32_t sample_history(std::mt19937_64& rng, int t, int s, int c) {
  int ones = s - c;
  std::uint32_t bits = c ? (1u << (t - 1)) : 0u;
  for (int i = 0; i < t - 1; ++i) {
    const auto remaining = static_cast<std::uint64_t>(t - 1 - i);
    if (uniform_below(rng, remaining) < static_cast<std::uint64_t>(ones)) {
      bits |= 1u << i;
      --ones;
    }
  }
  return bits;
}

namespace {

// Largest-remainder split of `total` proportional to `weights`.
std::vector<std::uint64_t> allocate(std::uint64_t total, const std::vector<double>& weights) {
  std::vector<std::uint64_t> out(weights.size(), 0);
  const long double sum = std::accumulate(weights.begin(), weights.end(), 0.0L);
  if (sum <= 0 || total == 0) return out;
  std::vector<std::pair<long double, std::size_t>> remainders;
  std::uint64_t used = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const long double exact = static_cast<long double>(total) * weights[i] / sum;
    out[i] = static_cast<std::uint64_t>(std::floor(exact));
    used += out[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  for (std::size_t k = 0; used < total && k < remainders.size(); ++k, ++used) ++out[remainders[k].second];
  return out;
}

// Draw multiplicities as sorted (history, count) runs.
using Runs = std::vector<std::pair<std::uint32_t, std::int64_t>>;

Runs runs_of(std::vector<std::uint32_t> bits) {
  std::sort(bits.begin(), bits.end());
  Runs out;
  for (std::uint32_t b : bits) {
    if (!out.empty() && out.back().first == b) {
      ++out.back().second;
    } else {
      out.emplace_back(b, 1);
    }
  }
  return out;
}

std::int64_t run_cross(const Runs& x, const Runs& y) {
  std::int64_t total = 0;
  for (std::size_t i = 0, j = 0; i < x.size() && j < y.size();) {
    if (x[i].first < y[j].first) {
      ++i;
    } else if (y[j].first < x[i].first) {
      ++j;
    } else {
      total += x[i++].second * y[j++].second;
    }
  }
  return total;
}

// Mean term over ordered pairs of distinct draws, with repeated histories
// counted as 0: (Σ_K T_K^2 - Σ_a c_a^2) / (m (m - 1)).
double pair_mean(std::int64_t class_squares, std::int64_t repeat_squares, std::int64_t draws) {
  const auto m = static_cast<double>(draws);
  return static_cast<double>(class_squares - repeat_squares) / (m * (m - 1));
}

struct Batch {
  ClassTally tally;
  std::vector<std::uint32_t> bits;
};

}  // namespace

MCResult anyonic_distribution_mc(const WalkConfig& cfg, const MCOptions& options) {
  if (options.batches < 1) throw ConfigError("MC batch count must be positive");
  const int threads = options.threads > 0 ? options.threads : default_thread_count();
  const PairEngine engine(cfg);

  MCResult result;
  result.estimate.seed = options.seed;
  result.estimate.samples = options.samples;
  auto& strata = result.estimate.strata;
  std::vector<double> weights;
  for (int s = 0; s <= cfg.t && cfg.t > 0; ++s) {
    for (int c = 0; c <= 1; ++c) {
      if (s < c || s - c > cfg.t - 1) continue;
      MCStratum st;
      st.s = s;
      st.last_bit = c;
      st.histories = binomial_u64(cfg.t - 1, s - c);
      const auto h = static_cast<double>(st.histories);
      st.non_mirror_pairs = h * h - h;
      strata.push_back(st);
      weights.push_back(st.non_mirror_pairs);
    }
  }
  const std::vector<std::uint64_t> alloc = allocate(options.samples, weights);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (std::size_t i = 0; i < strata.size(); ++i) {
    MCStratum& st = strata[i];
    st.samples = alloc[i];
    if (st.non_mirror_pairs == 0) continue;
    // Strata too small to split into two batches are cheaper to enumerate.
    const std::uint64_t floor = 2 * static_cast<std::uint64_t>(options.batches);
    if (options.samples > 0 && st.histories <= std::max({st.samples, options.exhaustive_histories, floor})) {
      st.exhaustive = true;
      const ClassTally all = tally_histories(engine, histories_in_stratum(cfg.t, st.s, st.last_bit), threads);
      st.estimate = static_cast<double>(all.square_sum() - all.histories());
      st.pair_mean = st.estimate / st.non_mirror_pairs;
      st.std_error = 0.0;
      continue;
    }
    if (options.samples == 0) continue;
    // A sampled stratum always gets enough draws for a jackknife.
    st.samples = std::max<std::uint64_t>(st.samples, 4);
    st.batches = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(options.batches), st.samples / 2));
    std::vector<Batch> batches(static_cast<std::size_t>(st.batches));
    parallel_for(batches.size(), threads, [&](std::size_t b) {
      const std::uint64_t size = st.samples / batches.size() + (b < st.samples % batches.size() ? 1 : 0);
      auto rng = make_stream(options.seed, {static_cast<std::uint64_t>(cfg.t), static_cast<std::uint64_t>(st.s),
                                            static_cast<std::uint64_t>(st.last_bit), b});
      Batch& out = batches[b];
      out.bits.reserve(size);
      for (std::uint64_t k = 0; k < size; ++k) {
        const std::uint32_t bits = sample_history(rng, cfg.t, st.s, st.last_bit);
        out.bits.push_back(bits);
        out.tally.add(engine.factor(bits));
      }
    });
    ClassTally merged;
    std::vector<std::uint32_t> all_bits;
    std::vector<Runs> batch_runs;
    for (const Batch& b : batches) {
      merged.merge(b.tally);
      all_bits.insert(all_bits.end(), b.bits.begin(), b.bits.end());
      batch_runs.push_back(runs_of(b.bits));
    }
    const Runs all_runs = runs_of(std::move(all_bits));
    const std::int64_t m = merged.histories();
    const std::int64_t s2 = merged.square_sum();
    const std::int64_t r2 = run_cross(all_runs, all_runs);
    // Draws are independent and uniform, so the pair average is unbiased for
    // the mean over all ordered pairs (a, b).
    const double h = static_cast<double>(st.histories);
    const double scale = h * h;
    st.estimate = scale * pair_mean(s2, r2, m);
    st.pair_mean = st.estimate / st.non_mirror_pairs;
    if (st.batches >= 2) {
      // Delete-one-batch jackknife of the full pair average.
      std::vector<double> loo;
      for (std::size_t b = 0; b < batches.size(); ++b) {
        const ClassTally& tb = batches[b].tally;
        const Runs& rb = batch_runs[b];
        const std::int64_t s2b = s2 - 2 * merged.cross_sum(tb) + tb.square_sum();
        const std::int64_t r2b = r2 - 2 * run_cross(all_runs, rb) + run_cross(rb, rb);
        loo.push_back(pair_mean(s2b, r2b, m - tb.histories()));
      }
      const double mean = std::accumulate(loo.begin(), loo.end(), 0.0) / static_cast<double>(loo.size());
      double ss = 0;
      for (double v : loo) ss += (v - mean) * (v - mean);
      const double k = static_cast<double>(loo.size());
      st.std_error = scale * std::sqrt((k - 1) / k * ss);
    } else {
      st.std_error = nan;
    }
  }

  Distribution& d = result.distribution;
  d.t = cfg.t;
  d.s0 = cfg.s0;
  d.kind = DistKind::AnyonicMC;
  std::vector<double> sums(static_cast<std::size_t>(cfg.t) + 1, 0.0);
  std::vector<double> variances(sums.size(), 0.0);
  if (cfg.t == 0) sums[0] = 1.0;
  for (const MCStratum& st : strata) {
    const auto i = static_cast<std::size_t>(st.s);
    // Every mirror pair is a trivial proper link with z even: +1 each.
    sums[i] += static_cast<double>(st.histories) + st.estimate;
    variances[i] += st.std_error * st.std_error;
  }
  const double scale = std::ldexp(1.0, -cfg.t);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    d.weights.push_back(sums[i] * scale);
    d.std_errors.push_back(std::sqrt(variances[i]) * scale);
  }
  return result;
}

}  // namespace anyonwalk
