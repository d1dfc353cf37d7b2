#include "anyonwalk/properstats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/pair_enumeration.hpp"
#include "anyonwalk/parallel.hpp"
#include "anyonwalk/sampling.hpp"

namespace anyonwalk {

BigInt binomial(int m, int k) {
  if (k < 0 || m < 0 || k > m) return 0;
  k = std::min(k, m - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= m - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t binomial_u64(int m, int k) {
  const BigInt v = binomial(m, k);
  if (v > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial exceeds 64 bits");
  return v.convert_to<std::uint64_t>();
}

LatticePathCounts lattice_counts(int n) {
  if (n < 1) throw ConfigError("lattice_counts needs n >= 1");
  LatticePathCounts c;
  c.n = n;
  c.all = binomial(2 * n - 1, n - 1);
  for (int w = 1; w <= n + 1; ++w) c.touch.push_back(binomial(2 * n - 1, n - w));
  for (int w = 1; w <= n; ++w) c.pw.push_back(c.touch[static_cast<std::size_t>(w - 1)] - c.touch[static_cast<std::size_t>(w)]);
  c.touch.pop_back();
  return c;
}

std::optional<BigInt> LatticePathCounts::pw_closed_form(int w) const {
  const BigInt num = BigInt(w) * binomial(2 * n, n - w);
  if (num % n != 0) return std::nullopt;
  return BigInt(num / n);
}

namespace {

struct StratumPairs {
  std::vector<std::uint32_t> histories;
  double non_mirror = 0;
};

}  // namespace

ProperDensity proper_density(const WalkConfig& cfg, int s, const ProperOptions& options) {
  ProperDensity out;
  out.t = cfg.t;
  out.s = s;
  out.method = options.method;
  std::vector<StratumPairs> strata;
  double non_mirror = 0;
  for (int c = 0; c <= 1; ++c) {
    StratumPairs sp;
    if (s >= c && s - c <= cfg.t - 1) {
      const auto h = static_cast<double>(binomial_u64(cfg.t - 1, s - c));
      sp.non_mirror = h * h - h;
    }
    non_mirror += sp.non_mirror;
    strata.push_back(std::move(sp));
  }
  if (non_mirror == 0) {
    out.empty = true;
    return out;
  }
  const PairEngine engine(cfg);
  const int threads = options.threads > 0 ? options.threads : default_thread_count();

  if (options.method == Method::Exact) {
    if (cfg.t > options.cap) throw CapExceeded("exact proper density is capped at t=" + std::to_string(options.cap));
    double proper = 0;
    for (int c = 0; c <= 1; ++c) {
      std::map<std::array<std::uint64_t, 2>, double> groups;
      const auto hs = histories_in_stratum(cfg.t, s, c);
      for (std::uint32_t bits : hs) groups[engine.describe(bits).signature] += 1;
      for (const auto& [sig, count] : groups) proper += count * count;
      proper -= static_cast<double>(hs.size());
    }
    out.proper_pairs = proper;
    out.total_pairs = non_mirror;
    out.value = proper / non_mirror;
    return out;
  }

  if (options.samples == 0) throw ConfigError("Monte Carlo proper density needs samples > 0");
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;
  const std::size_t chunks = static_cast<std::size_t>((options.samples + kChunk - 1) / kChunk);
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t k) {
    auto rng = make_stream(options.seed, {0x70726f70ull, static_cast<std::uint64_t>(cfg.t),
                                          static_cast<std::uint64_t>(s), k});
    const std::uint64_t count = std::min(kChunk, options.samples - k * kChunk);
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      // Pick the a_t class in proportion to its non-mirror pair count.
      const double u = std::ldexp(static_cast<double>(rng() >> 11), -53) * non_mirror;
      const int c = u < strata[0].non_mirror ? 0 : 1;
      const std::uint32_t a = sample_history(rng, cfg.t, s, c);
      std::uint32_t b = sample_history(rng, cfg.t, s, c);
      while (b == a) b = sample_history(rng, cfg.t, s, c);
      h += PairEngine::proper(engine.describe(a), engine.describe(b)) ? 1 : 0;
    }
    hits[k] = h;
  });
  std::uint64_t total_hits = 0;
  for (auto h : hits) total_hits += h;
  const auto n = static_cast<double>(options.samples);
  out.proper_pairs = static_cast<double>(total_hits);
  out.total_pairs = n;
  out.value = out.proper_pairs / n;
  out.std_error = std::sqrt(std::max(out.value * (1 - out.value), 0.0) / n);
  return out;
}

ParityProbs parity_probs(const WalkConfig& cfg, int s, std::uint64_t samples, std::uint64_t seed, int threads) {
  ParityProbs out;
  out.t = cfg.t;
  out.s = s;
  out.samples = samples;
  const int window = cfg.bond_window();
  double weights[2] = {0, 0};
  for (int c = 0; c <= 1; ++c) {
    if (s >= c && s - c <= cfg.t - 1) {
      const auto h = static_cast<double>(binomial_u64(cfg.t - 1, s - c));
      weights[c] = h * h - h;
    }
  }
  const double total_weight = weights[0] + weights[1];
  for (int k = 0; k < window; ++k) out.component.push_back(cfg.first_bond() + k);
  out.touched.assign(static_cast<std::size_t>(window), 0);
  out.even.assign(static_cast<std::size_t>(window), 0);
  out.p_even.assign(static_cast<std::size_t>(window), std::nan(""));
  out.neighbour_correlation.assign(static_cast<std::size_t>(std::max(0, window - 1)), std::nan(""));
  if (total_weight == 0 || samples == 0) return out;

  struct Tally {
    std::vector<std::uint64_t> touched, even, both, both_even_left, both_even_right, both_even;
  };
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;
  const std::size_t chunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
  std::vector<Tally> tallies(chunks);
  const PairEngine engine(cfg);
  const int workers = threads > 0 ? threads : default_thread_count();
  parallel_for(chunks, workers, [&](std::size_t k) {
    Tally tl;
    const auto w = static_cast<std::size_t>(window);
    tl.touched.assign(w, 0);
    tl.even.assign(w, 0);
    tl.both.assign(w, 0);
    tl.both_even_left.assign(w, 0);
    tl.both_even_right.assign(w, 0);
    tl.both_even.assign(w, 0);
    auto rng = make_stream(seed, {0x70617269ull, static_cast<std::uint64_t>(cfg.t), static_cast<std::uint64_t>(s), k});
    const std::uint64_t count = std::min(kChunk, samples - k * kChunk);
    std::vector<int> touched(w), even(w);
    for (std::uint64_t i = 0; i < count; ++i) {
      const double u = std::ldexp(static_cast<double>(rng() >> 11), -53) * total_weight;
      const int c = u < weights[0] ? 0 : 1;
      const std::uint32_t a = sample_history(rng, cfg.t, s, c);
      std::uint32_t b = sample_history(rng, cfg.t, s, c);
      while (b == a) b = sample_history(rng, cfg.t, s, c);
      const HistoryData ha = engine.describe(a);
      const HistoryData hb = engine.describe(b);
      for (std::size_t j = 0; j < w; ++j) {
        const int ca = ha.crossings[j];
        const int cb = hb.crossings[j];
        touched[j] = (ca + cb) > 0;
        even[j] = ((ca - cb) / 2) % 2 == 0;
        if (touched[j]) {
          ++tl.touched[j];
          tl.even[j] += static_cast<std::uint64_t>(even[j]);
        }
      }
      for (std::size_t j = 0; j + 1 < w; ++j) {
        if (!touched[j] || !touched[j + 1]) continue;
        ++tl.both[j];
        tl.both_even_left[j] += static_cast<std::uint64_t>(even[j]);
        tl.both_even_right[j] += static_cast<std::uint64_t>(even[j + 1]);
        tl.both_even[j] += static_cast<std::uint64_t>(even[j] && even[j + 1]);
      }
    }
    tallies[k] = std::move(tl);
  });

  const auto w = static_cast<std::size_t>(window);
  std::vector<std::uint64_t> both(w, 0), el(w, 0), er(w, 0), ee(w, 0);
  for (const Tally& tl : tallies) {
    for (std::size_t j = 0; j < w; ++j) {
      out.touched[j] += tl.touched[j];
      out.even[j] += tl.even[j];
      both[j] += tl.both[j];
      el[j] += tl.both_even_left[j];
      er[j] += tl.both_even_right[j];
      ee[j] += tl.both_even[j];
    }
  }
  const std::uint64_t min_touched = std::max<std::uint64_t>(100, samples / 100);
  bool any = false;
  for (std::size_t j = 0; j < w; ++j) {
    if (out.touched[j] == 0) continue;
    const double n = static_cast<double>(out.touched[j]);
    out.p_even[j] = static_cast<double>(out.even[j]) / n;
    if (out.touched[j] >= min_touched && (!any || out.p_even[j] > out.rho)) {
      any = true;
      out.rho = out.p_even[j];
      out.rho_std_error = std::sqrt(std::max(out.rho * (1 - out.rho), 0.0) / n);
    }
  }
  for (std::size_t j = 0; j + 1 < w; ++j) {
    if (both[j] < 2) continue;
    const double n = static_cast<double>(both[j]);
    const double pl = static_cast<double>(el[j]) / n;
    const double pr = static_cast<double>(er[j]) / n;
    const double pj = static_cast<double>(ee[j]) / n;
    const double denom = std::sqrt(pl * (1 - pl) * pr * (1 - pr));
    if (denom > 0) out.neighbour_correlation[j] = (pj - pl * pr) / denom;
  }
  return out;
}

double analytic_bound(double rho, int t) {
  if (!(rho >= 0.0) || rho >= 1.0) throw ConfigError("analytic bound needs 0 <= rho < 1 (the series diverges at 1)");
  if (t < 4) throw ConfigError("analytic bound holds for t >= 4");
  const double series = rho * (1 + 4 * rho + rho * rho) / std::pow(1 - rho, 4);
  return 96.0 / 5.0 * series / (static_cast<double>(t) * t);
}

}  // namespace anyonwalk
