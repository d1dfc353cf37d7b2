#include "anyonwalk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/fusion_oracle.hpp"
#include "anyonwalk/linkinv.hpp"
#include "anyonwalk/properstats.hpp"
#include "anyonwalk/random_words.hpp"
#include "anyonwalk/walkdist.hpp"

namespace anyonwalk::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(std::string(what) + " must be a number, got '" + text + "'");
  }
  if (used != text.size() || !(v >= 0) || v > 1e18 || v != std::floor(v)) {
    throw ConfigError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::uint64_t>(v);
}

Json conventions() {
  Json c;
  c["bracket"] = std::string(kBracketConvention);
  c["A_root"] = "exp(3*pi*i/8)";
  c["generator_phase"] = "exp(i*pi/8)";
  c["ising_generator"] = "phase*(1+G_j G_{j+1})/sqrt(2)";
  c["coin"] = "Hadamard, initial |0>, coin 0 moves left";
  c["position"] = "x = 2s - t + s0, s = right moves";
  return c;
}

struct CommonOptions {
  int t = -1;
  int n = 0;
  std::optional<int> s0;
  std::string method = "exact";
  std::string samples = "0";
  std::optional<std::uint64_t> seed;
  int threads = 0;
  int cap = 14;
  std::uint64_t exhaustive_histories = std::uint64_t{1} << 17;
  std::string output;
  std::string format;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool needs_t) {
  auto* t = cmd->add_option("--t", o.t, "Number of walk steps");
  if (needs_t) t->required();
  cmd->add_option("--n", o.n, "Strand count (default 2t+2)");
  cmd->add_option("--s0", o.s0, "Initial site (default ceil(n/2))");
  cmd->add_option("--method", o.method, "exact or mc")->check(CLI::IsMember({"exact", "mc"}));
  cmd->add_option("--samples", o.samples, "Monte Carlo sample count (accepts 1e7)");
  cmd->add_option("--seed", o.seed, "Monte Carlo seed (required for mc)");
  cmd->add_option("--threads", o.threads, "Worker threads (default: ANYONWALK_THREADS or all cores)");
  cmd->add_option("--cap", o.cap, "Largest t for exhaustive enumeration");
  cmd->add_option("--exhaustive-histories", o.exhaustive_histories,
                  "MC: sum strata with at most this many histories exactly");
  cmd->add_option("--output,-o", o.output, "Output file; format inferred from extension");
  cmd->add_option("--format", o.format, "csv or json (overrides the extension)")
      ->check(CLI::IsMember({"csv", "json"}));
}

bool wants_json(const CommonOptions& o) {
  if (!o.format.empty()) return o.format == "json";
  return o.output.size() >= 5 && o.output.substr(o.output.size() - 5) == ".json";
}

int threads_of(const CommonOptions& o) { return o.threads > 0 ? o.threads : 0; }

void emit(const CommonOptions& o, const std::string& text, std::ostream& out) {
  if (o.output.empty() || o.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file " + o.output);
  file << text;
}

std::uint64_t require_seed(const CommonOptions& o) {
  if (!o.seed) throw ConfigError("--seed is required for Monte Carlo runs");
  return *o.seed;
}

struct AnyonicRun {
  Distribution dist;
  std::string method;
  std::optional<MCEstimate> estimate;
};

AnyonicRun run_anyonic(const WalkConfig& cfg, const CommonOptions& o, TraceMode mode) {
  if (o.method == "mc") {
    if (mode != TraceMode::Invariants) throw ConfigError("--stub-trivial-bracket needs --method exact");
    MCOptions mc;
    mc.samples = parse_count(o.samples, "--samples");
    mc.seed = require_seed(o);
    mc.threads = threads_of(o);
    mc.exhaustive_histories = o.exhaustive_histories;
    MCResult r = anyonic_distribution_mc(cfg, mc);
    return {std::move(r.distribution), "mc", std::move(r.estimate)};
  }
  ExactOptions ex;
  ex.cap = o.cap;
  ex.threads = threads_of(o);
  ex.mode = mode;
  return {anyonic_distribution_exact(cfg, ex), mode == TraceMode::StubTrivial ? "exact-stub" : "exact", {}};
}

std::string to_string(const BigInt& v) { return v.str(); }

Json bracket_json(const BracketValue& v) {
  Json j;
  j["exact"] = v.to_string();
  const auto c = v.to_complex();
  j["re"] = c.real();
  j["im"] = c.imag();
  return j;
}

// ---------------------------------------------------------------- dist

int cmd_dist(const CommonOptions& o, bool stub, std::ostream& out) {
  const WalkConfig cfg = WalkConfig::make(o.t, o.n, o.s0);
  const AnyonicRun run = run_anyonic(cfg, o, stub ? TraceMode::StubTrivial : TraceMode::Invariants);
  const Distribution qw = hadamard_qw(cfg);
  const Distribution rw = classical_rw(cfg);
  const Distribution& p = run.dist;

  if (wants_json(o)) {
    Json j;
    j["schema"] = "anyonwalk.dist/1";
    j["version"] = kVersion;
    j["conventions"] = conventions();
    j["config"] = {{"t", cfg.t}, {"n", cfg.n}, {"s0", cfg.s0}};
    j["method"] = run.method;
    if (run.estimate) {
      j["seed"] = run.estimate->seed;
      j["samples"] = run.estimate->samples;
    } else {
      j["seed"] = nullptr;
      j["samples"] = nullptr;
    }
    Json rows = Json::array();
    for (int s = 0; s <= cfg.t; ++s) {
      const auto i = static_cast<std::size_t>(s);
      Json r;
      r["t"] = cfg.t;
      r["s"] = s;
      r["x"] = cfg.position(s);
      r["p_anyonic"] = p.weights[i];
      r["p_qw"] = qw.weights[i];
      r["p_rw"] = rw.weights[i];
      if (p.is_exact()) r["numerator"] = to_string(p.numerators[i]);
      r["stderr"] = p.std_errors.empty() ? Json(nullptr) : Json(p.std_errors[i]);
      rows.push_back(r);
    }
    j["denominator_log2"] = cfg.t;
    j["rows"] = rows;
    const WalkStats st = stats(p, {qw, rw});
    j["stats"] = {{"mean", st.mean}, {"variance", st.variance}, {"tv_qw", st.tv_distances[0]},
                  {"tv_rw", st.tv_distances[1]}};
    emit(o, j.dump(2) + "\n", out);
    return kOk;
  }

  std::ostringstream csv;
  csv << "t,s,x,p_anyonic,p_qw,p_rw,method,stderr\n";
  for (int s = 0; s <= cfg.t; ++s) {
    const auto i = static_cast<std::size_t>(s);
    csv << cfg.t << ',' << s << ',' << cfg.position(s) << ',' << fmt(p.weights[i]) << ',' << fmt(qw.weights[i])
        << ',' << fmt(rw.weights[i]) << ',' << run.method << ','
        << (p.std_errors.empty() ? std::string() : fmt(p.std_errors[i])) << '\n';
  }
  emit(o, csv.str(), out);
  return kOk;
}

// ---------------------------------------------------------------- variance-scan

int cmd_variance_scan(const CommonOptions& o, int t_min, int t_max, std::ostream& out) {
  if (t_min < 0 || t_max < t_min) throw ConfigError("need 0 <= --t-min <= --t-max");
  std::ostringstream csv;
  Json rows = Json::array();
  csv << "t,var_anyonic,var_qw,var_rw,tv_qw,tv_rw\n";
  for (int t = t_min; t <= t_max; ++t) {
    // Every t in the scan uses its own default geometry unless n is forced.
    const WalkConfig cfg = WalkConfig::make(t, o.n, o.s0);
    const AnyonicRun run = run_anyonic(cfg, o, TraceMode::Invariants);
    const Distribution qw = hadamard_qw(cfg);
    const Distribution rw = classical_rw(cfg);
    const WalkStats sp = stats(run.dist, {qw, rw});
    const WalkStats sq = stats(qw);
    const WalkStats sr = stats(rw);
    csv << t << ',' << fmt(sp.variance) << ',' << fmt(sq.variance) << ',' << fmt(sr.variance) << ','
        << fmt(sp.tv_distances[0]) << ',' << fmt(sp.tv_distances[1]) << '\n';
    rows.push_back({{"t", t}, {"var_anyonic", sp.variance}, {"var_qw", sq.variance}, {"var_rw", sr.variance},
                    {"tv_qw", sp.tv_distances[0]}, {"tv_rw", sp.tv_distances[1]}, {"method", run.method}});
  }
  if (wants_json(o)) {
    Json j;
    j["schema"] = "anyonwalk.variance-scan/1";
    j["version"] = kVersion;
    j["conventions"] = conventions();
    j["method"] = o.method;
    j["seed"] = o.seed ? Json(*o.seed) : Json(nullptr);
    j["samples"] = o.method == "mc" ? Json(parse_count(o.samples, "--samples")) : Json(nullptr);
    j["rows"] = rows;
    emit(o, j.dump(2) + "\n", out);
  } else {
    emit(o, csv.str(), out);
  }
  return kOk;
}

// ---------------------------------------------------------------- invariants

int cmd_invariants(const CommonOptions& o, const std::string& a_text, const std::string& b_text, int bracket_cap,
                   std::ostream& out) {
  const CoinHistory a = CoinHistory::parse(a_text);
  const CoinHistory b = CoinHistory::parse(b_text);
  const WalkConfig cfg = WalkConfig::make(a.length(), o.n, o.s0);
  const PathPair pair(a, b);
  const ClosedLink link = walk_link(pair, cfg);
  const LinkingProfile profile = linking_profile(link);
  const bool proper = is_proper(profile);
  const int z = coin_parity_z(pair);

  Json j;
  j["schema"] = "anyonwalk.invariants/1";
  j["version"] = kVersion;
  j["conventions"] = conventions();
  j["config"] = {{"t", cfg.t}, {"n", cfg.n}, {"s0", cfg.s0}};
  j["a"] = a.to_string();
  j["a_prime"] = b.to_string();
  j["mirror"] = pair.is_mirror();
  j["braid_word"] = link.word.to_string();
  j["components"] = link.num_components;
  j["writhe"] = writhe(link);
  Json lk = Json::object();
  for (const auto& [strand, v] : profile.lk) {
    // Report by generator index of the pinned anyon: strand k < s0 is pinned k, else k-1.
    const int pinned = strand < cfg.s0 ? strand : strand - 1;
    lk[std::to_string(pinned)] = v;
  }
  j["linking"] = lk;
  j["total_linking"] = profile.total_linking;
  j["proper"] = proper;
  j["z"] = z;
  const BracketValue v = jones_at_i(link);
  if (proper) {
    const int t = tau(link);
    const int f = *arf(link);
    j["tau"] = t;
    j["arf"] = f;
    j["sign"] = ((z + t) % 2) ? -1 : 1;
  } else {
    j["tau"] = nullptr;
    j["arf"] = nullptr;
    j["sign"] = 0;
  }
  j["jones_at_i"] = bracket_json(v);
  if (static_cast<int>(link.crossings.size()) <= bracket_cap) {
    j["bracket_statesum"] = bracket_json(kauffman_bracket_statesum(link, bracket_cap));
    j["jones_from_statesum"] = bracket_json(jones_from_statesum(link, bracket_cap));
  } else {
    j["bracket_statesum"] = nullptr;
    j["jones_from_statesum"] = nullptr;
  }
  emit(o, j.dump(2) + "\n", out);
  return kOk;
}

// ---------------------------------------------------------------- proper-density

int cmd_proper_density(const CommonOptions& o, int t_min, int t_max, std::optional<int> s_opt,
                       std::uint64_t parity_samples, std::ostream& out, std::ostream& err) {
  if (t_min < 1 || t_max < t_min) throw ConfigError("need 1 <= --t-min <= --t-max");
  const std::uint64_t seed = require_seed(o);
  std::ostringstream csv;
  csv << "t,s,p_prop,method,stderr,rho,bound,bound_ok\n";
  Json rows = Json::array();
  for (int t = t_min; t <= t_max; ++t) {
    const WalkConfig cfg = WalkConfig::make(t, o.n, o.s0);
    int s = 0;
    if (s_opt) {
      s = *s_opt;
    } else if (t % 2 != 0) {
      err << "notice: t=" << t << " is odd, so no path ends at s0; stratum is empty\n";
      csv << t << ",,,empty_stratum,,,,\n";
      rows.push_back({{"t", t}, {"s", nullptr}, {"method", "empty_stratum"}});
      continue;
    } else {
      s = t / 2;
    }
    if (s < 0 || s > t) throw ConfigError("--s must lie in [0, t]");
    ProperOptions po;
    po.method = o.method == "mc" ? Method::MonteCarlo : Method::Exact;
    po.samples = o.method == "mc" ? parse_count(o.samples, "--samples") : 0;
    po.seed = seed;
    po.cap = o.cap;
    po.threads = threads_of(o);
    const ProperDensity pd = proper_density(cfg, s, po);
    if (pd.empty) {
      err << "notice: t=" << t << ", s=" << s << " has no non-mirror pairs\n";
      csv << t << ',' << s << ",," << "empty_stratum" << ",,,,\n";
      rows.push_back({{"t", t}, {"s", s}, {"method", "empty_stratum"}});
      continue;
    }
    const ParityProbs pp = parity_probs(cfg, s, parity_samples, seed, threads_of(o));
    double bound = std::nan("");
    if (t >= 4 && pp.rho < 1.0) bound = analytic_bound(pp.rho, t);
    const bool ok = !std::isnan(bound) && bound >= pd.value;
    const std::string method = o.method;
    csv << t << ',' << s << ',' << fmt(pd.value) << ',' << method << ',' << fmt(pd.std_error) << ','
        << fmt(pp.rho) << ',' << fmt(bound) << ',' << (ok ? 1 : 0) << '\n';
    Json corr = Json::array();
    for (std::size_t k = 0; k < pp.neighbour_correlation.size(); ++k) {
      if (std::isnan(pp.neighbour_correlation[k])) continue;
      corr.push_back({{"j", pp.component[k]}, {"corr", pp.neighbour_correlation[k]}});
    }
    Json pe = Json::array();
    for (std::size_t k = 0; k < pp.p_even.size(); ++k) {
      if (pp.touched[k] == 0) continue;
      pe.push_back({{"j", pp.component[k]}, {"touched", pp.touched[k]}, {"p_even", pp.p_even[k]}});
    }
    rows.push_back({{"t", t}, {"s", s}, {"p_prop", pd.value}, {"method", method}, {"stderr", pd.std_error},
                    {"rho", pp.rho}, {"bound", std::isnan(bound) ? Json(nullptr) : Json(bound)},
                    {"bound_ok", ok}, {"p_even", pe}, {"neighbour_parity_correlation", corr}});
  }
  if (wants_json(o)) {
    const LatticePathCounts lc = lattice_counts(2);
    const bool lattice_ok = lc.all == 3 && lc.pw.size() == 2 && lc.pw[0] == 2 && lc.pw[1] == 1;
    Json j;
    j["schema"] = "anyonwalk.proper-density/1";
    j["version"] = kVersion;
    j["seed"] = seed;
    j["parity_samples"] = parity_samples;
    j["lattice_selftest"] = {{"n", 2}, {"all", to_string(lc.all)}, {"P1", to_string(lc.pw[0])},
                             {"P2", to_string(lc.pw[1])}, {"ok", lattice_ok}};
    j["rows"] = rows;
    emit(o, j.dump(2) + "\n", out);
  } else {
    emit(o, csv.str(), out);
  }
  return kOk;
}

// ---------------------------------------------------------------- selfcheck

struct CheckRow {
  std::string name;
  bool pass;
  std::string detail;
};

int cmd_selfcheck(int phase_eighths, int threads, std::ostream& out) {
  std::vector<CheckRow> rows;
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    try {
      const std::string failure = body();
      rows.push_back({name, failure.empty(), failure.empty() ? "ok" : failure});
    } catch (const std::exception& e) {
      rows.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };

  check("jones_at_i == state sum (walk links t<=4)", [] {
    for (int t = 1; t <= 4; ++t) {
      const WalkConfig cfg = WalkConfig::make(t);
      for (std::uint32_t x = 0; x < (1u << t); ++x) {
        for (std::uint32_t y = 0; y < (1u << t); ++y) {
          const CoinHistory a(x, t), b(y, t);
          if (a.weight() != b.weight() || a.last() != b.last()) continue;
          const ClosedLink link = walk_link(PathPair(a, b), cfg);
          if (!(jones_at_i(link) == jones_from_statesum(link))) return "mismatch at " + a.to_string() + "/" + b.to_string();
        }
      }
    }
    return std::string();
  });

  check("jones_at_i == state sum (300 random star words)", [] {
    std::mt19937_64 rng(20240601);
    for (int k = 0; k < 300; ++k) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const int len = 2 * static_cast<int>(rng() % 6);
      const ClosedLink link = close_link(random_star_word(rng, n, len));
      if (!(jones_at_i(link) == jones_from_statesum(link))) return "mismatch on " + link.word.to_string();
    }
    return std::string();
  });

  check("fusion trace == d^-(n-1) <L> (200 random words)", [phase_eighths] {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 200; ++k) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const int len = 2 * static_cast<int>(rng() % 6);
      const BraidWord w = random_star_word(rng, n, len);
      const IsingRep rep(n, phase_eighths);
      const Complex tr = fusion_trace(rep, w);
      const Complex bracket = kauffman_bracket_statesum(close_link(w)).to_complex() * std::pow(2.0, -0.5 * (n - 1));
      if (std::abs(tr - bracket) > 1e-9) return "mismatch on " + w.to_string();
    }
    return std::string();
  });

  check("oracle distribution == exact (t<=5)", [phase_eighths, threads] {
    for (int t = 1; t <= 5; ++t) {
      const WalkConfig cfg = WalkConfig::make(t);
      OracleOptions oo;
      oo.phase_eighths = phase_eighths;
      oo.threads = threads;
      ExactOptions eo;
      eo.threads = threads;
      const Distribution a = oracle_distribution(cfg, oo);
      const Distribution b = anyonic_distribution_exact(cfg, eo);
      for (int s = 0; s <= t; ++s) {
        if (std::abs(a.weights[static_cast<std::size_t>(s)] - b.weights[static_cast<std::size_t>(s)]) > 1e-9) {
          return "mismatch at t=" + std::to_string(t) + " s=" + std::to_string(s);
        }
      }
    }
    return std::string();
  });

  check("factorized exact == pairwise (t<=10)", [threads] {
    for (int t = 0; t <= 10; ++t) {
      ExactOptions eo;
      eo.threads = threads;
      const WalkConfig cfg = WalkConfig::make(t);
      if (anyonic_distribution_exact(cfg, eo).numerators != anyonic_distribution_pairwise(cfg, eo).numerators) {
        return "mismatch at t=" + std::to_string(t);
      }
    }
    return std::string();
  });

  check("stub bracket reproduces Hadamard walk (t<=8)", [threads] {
    for (int t = 0; t <= 8; ++t) {
      const WalkConfig cfg = WalkConfig::make(t);
      ExactOptions eo;
      eo.mode = TraceMode::StubTrivial;
      eo.threads = threads;
      if (anyonic_distribution_exact(cfg, eo).numerators != hadamard_qw(cfg).numerators) {
        return "mismatch at t=" + std::to_string(t);
      }
    }
    return std::string();
  });

  check("exact normalization (t<=8)", [threads] {
    for (int t = 0; t <= 8; ++t) {
      ExactOptions eo;
      eo.threads = threads;
      const Distribution d = anyonic_distribution_exact(WalkConfig::make(t), eo);
      if (d.numerator_sum() != BigInt(1) << t) return "sum != 2^t at t=" + std::to_string(t);
      for (const auto& v : d.numerators) {
        if (v < 0) return "negative weight at t=" + std::to_string(t);
      }
    }
    return std::string();
  });

  check("lattice identities (n<=64)", [] {
    for (int n = 1; n <= 64; ++n) {
      const LatticePathCounts c = lattice_counts(n);
      BigInt sum = 0;
      for (int w = 1; w <= n; ++w) {
        sum += c.pw[static_cast<std::size_t>(w - 1)];
        if (c.pw_closed_form(w) != c.pw[static_cast<std::size_t>(w - 1)]) return "closed form fails at n=" + std::to_string(n);
      }
      if (sum != c.all) return "telescoping fails at n=" + std::to_string(n);
    }
    return std::string();
  });

  check("exact cap respected", [] {
    ExactOptions eo;
    eo.cap = 3;
    try {
      anyonic_distribution_exact(WalkConfig::make(4), eo);
    } catch (const CapExceeded&) {
      return std::string();
    }
    return std::string("t=4 ran past cap 3");
  });

  bool all = true;
  for (const CheckRow& r : rows) {
    out << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  [" << r.detail << "]\n";
    all = all && r.pass;
  }
  out << (all ? "selfcheck: all checks passed\n" : "selfcheck: FAILED\n");
  return all ? kOk : kSelfcheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"anyonwalk: Ising anyon quantum walk simulator and link-invariant toolkit"};
  app.set_version_flag("--version", std::string("anyonwalk ") + kVersion);
  app.require_subcommand(1);

  CommonOptions dist_o;
  bool stub = false;
  auto* dist = app.add_subcommand("dist", "Walker position distribution (anyonic, quantum, classical)");
  add_common(dist, dist_o, true);
  dist->add_flag("--stub-trivial-bracket", stub, "Replace every fusion trace by 1 (reproduces the Hadamard walk)");

  CommonOptions scan_o;
  int t_min = 1, t_max = 12;
  auto* scan = app.add_subcommand("variance-scan", "Variance and TV distances over a range of t");
  add_common(scan, scan_o, false);
  scan->add_option("--t-min", t_min, "First t")->required();
  scan->add_option("--t-max", t_max, "Last t")->required();

  CommonOptions inv_o;
  std::string a_text, b_text;
  int bracket_cap = 20;
  auto* inv = app.add_subcommand("invariants", "Link invariants of one path pair");
  add_common(inv, inv_o, false);
  inv->add_option("--a", a_text, "Forward coin history, a_1 first (e.g. 10011)")->required();
  inv->add_option("--b,--a-prime", b_text, "Backward coin history a'")->required();
  inv->add_option("--bracket-cap", bracket_cap, "Largest crossing count for the state-sum oracle");

  CommonOptions prop_o;
  int p_min = 4, p_max = 12;
  std::optional<int> s_opt;
  std::string parity_samples = "100000";
  auto* prop = app.add_subcommand("proper-density", "Proper-link density, parity probabilities and the C/t^2 bound");
  add_common(prop, prop_o, false);
  prop->add_option("--t-min", p_min, "First t")->required();
  prop->add_option("--t-max", p_max, "Last t")->required();
  prop->add_option("--s", s_opt, "Right-move count (default t/2, the origin)");
  prop->add_option("--parity-samples", parity_samples, "Samples for the parity probabilities");

  int phase_eighths = 1;
  int check_threads = 0;
  auto* selfcheck = app.add_subcommand("selfcheck", "Cross-oracle consistency checks at small sizes");
  selfcheck->add_option("--phase-eighths", phase_eighths, "Generator phase e^{ik pi/8} for the fusion oracle");
  selfcheck->add_option("--threads", check_threads, "Worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*dist) return cmd_dist(dist_o, stub, out);
    if (*scan) return cmd_variance_scan(scan_o, t_min, t_max, out);
    if (*inv) return cmd_invariants(inv_o, a_text, b_text, bracket_cap, out);
    if (*prop) {
      if (prop_o.t >= 0) p_min = p_max = prop_o.t;
      return cmd_proper_density(prop_o, p_min, p_max, s_opt, parse_count(parity_samples, "--parity-samples"), out, err);
    }
    if (*selfcheck) return cmd_selfcheck(phase_eighths, check_threads, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kValidation;
}

}  // namespace anyonwalk::cli
