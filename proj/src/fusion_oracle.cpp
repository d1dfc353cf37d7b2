#include "anyonwalk/fusion_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/pair_enumeration.hpp"
#include "anyonwalk/parallel.hpp"

namespace anyonwalk {

PauliString PauliString::operator*(const PauliString& o) const {
  // Z^{z1} X^{x2} = (-1)^{z1·x2} X^{x2} Z^{z1}.
  const bool flip = std::popcount(z & o.x) & 1;
  PauliString r;
  r.coeff = coeff * o.coeff * (flip ? -1.0 : 1.0);
  r.x = x ^ o.x;
  r.z = z ^ o.z;
  return r;
}

IsingRep::IsingRep(int n, int phase_eighths)
    : n_(n), qubits_((n + 1) / 2), phase_eighths_(phase_eighths),
      phase_(std::polar(1.0, phase_eighths * std::numbers::pi / 8.0)) {
  if (n < 1 || n > kMaxStrands) throw CapExceeded("Ising representation supports 1..40 strands");
  for (int q = 0; q < qubits_; ++q) {
    const std::uint64_t string = (std::uint64_t{1} << q) - 1;  // Z on qubits below q
    const std::uint64_t bit = std::uint64_t{1} << q;
    majoranas_.push_back({Complex(1, 0), bit, string});                // Z..Z X_q
    majoranas_.push_back({Complex(0, 1), bit, string | bit});          // Z..Z Y_q, Y = iXZ
  }
  majoranas_.resize(static_cast<std::size_t>(n));
  for (int j = 1; j < n; ++j) pair_products_.push_back(majorana(j) * majorana(j + 1));
}

void IsingRep::apply(int j, int sign, std::vector<Complex>& v) const {
  const PauliString& p = pair_products_[static_cast<std::size_t>(j - 1)];
  // ρ^{-1} = ρ^† = conj(phase)(1 - Γ_jΓ_{j+1})/√2.
  const Complex scale = (sign > 0 ? phase_ : std::conj(phase_)) / std::numbers::sqrt2;
  const Complex pc = sign > 0 ? p.coeff : -p.coeff;
  std::vector<Complex> out(v.size());
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b] == Complex{}) continue;
    const bool neg = std::popcount(static_cast<std::uint64_t>(b) & p.z) & 1;
    out[b] += v[b];
    out[b ^ p.x] += (neg ? -pc : pc) * v[b];
  }
  for (std::size_t b = 0; b < v.size(); ++b) v[b] = scale * out[b];
}

std::vector<Complex> IsingRep::generator_matrix(int j, int sign) const {
  const std::size_t d = dim();
  std::vector<Complex> m(d * d);
  for (std::size_t col = 0; col < d; ++col) {
    std::vector<Complex> e(d);
    e[col] = 1.0;
    apply(j, sign, e);
    for (std::size_t row = 0; row < d; ++row) m[row * d + col] = e[row];
  }
  return m;
}

Complex fusion_trace(const IsingRep& rep, const BraidWord& word) {
  if (word.strands != rep.strands()) throw ConfigError("word and representation differ in strand count");
  const std::size_t d = rep.dim();
  Complex sum{};
  std::vector<Complex> v(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::fill(v.begin(), v.end(), Complex{});
    v[col] = 1.0;
    for (const BraidLetter& l : word.letters) rep.apply(l.index, l.sign, v);
    sum += v[col];
  }
  return sum / static_cast<double>(d);
}

Complex fusion_trace_windowed(const BraidWord& word, int phase_eighths) {
  if (word.letters.empty()) return 1.0;
  int lo = word.strands;
  int hi = 0;
  for (const BraidLetter& l : word.letters) {
    lo = std::min(lo, l.index);
    hi = std::max(hi, l.index);
  }
  BraidWord local;
  local.strands = hi - lo + 2;
  for (const BraidLetter& l : word.letters) local.letters.push_back({l.index - lo + 1, l.sign});
  static std::mutex mutex;
  static std::map<std::pair<int, int>, IsingRep> cache;
  const IsingRep* rep = nullptr;
  {
    std::lock_guard lock(mutex);
    auto key = std::make_pair(local.strands, phase_eighths);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, IsingRep(local.strands, phase_eighths)).first;
    rep = &it->second;
  }
  return fusion_trace(*rep, local);
}

Distribution oracle_distribution(const WalkConfig& cfg, const OracleOptions& options) {
  if (cfg.t > options.cap) {
    throw CapExceeded("fusion-trace oracle is capped at t=" + std::to_string(options.cap));
  }
  const int threads = options.threads > 0 ? options.threads : default_thread_count();
  Distribution d;
  d.t = cfg.t;
  d.s0 = cfg.s0;
  d.kind = DistKind::AnyonicExact;
  d.weights.assign(static_cast<std::size_t>(cfg.t) + 1, 0.0);
  if (cfg.t == 0) {
    d.weights[0] = 1.0;
    return d;
  }
  struct Task {
    int s;
    std::vector<std::uint32_t> histories;
  };
  std::vector<Task> tasks;
  for (int s = 0; s <= cfg.t; ++s) {
    for (int c = 0; c <= 1; ++c) {
      auto hs = histories_in_stratum(cfg.t, s, c);
      if (!hs.empty()) tasks.push_back({s, std::move(hs)});
    }
  }
  std::vector<double> partial(tasks.size(), 0.0);
  parallel_for(tasks.size(), threads, [&](std::size_t k) {
    const Task& task = tasks[k];
    double sum = 0;
    for (std::uint32_t a : task.histories) {
      for (std::uint32_t b : task.histories) {
        const PathPair pair(CoinHistory(a, cfg.t), CoinHistory(b, cfg.t));
        const Complex tr = fusion_trace_windowed(combined_word(pair, cfg), options.phase_eighths);
        sum += (coin_parity_z(pair) ? -1.0 : 1.0) * tr.real();
      }
    }
    partial[k] = sum;
  });
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    d.weights[static_cast<std::size_t>(tasks[k].s)] += std::ldexp(partial[k], -cfg.t);
  }
  return d;
}

}  // namespace anyonwalk
