#include "rpvt/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rpvt/depth.hpp"
#include "rpvt/floating_body.hpp"
#include "rpvt/hull.hpp"
#include "rpvt/sampling.hpp"

namespace rpvt {

namespace {

using json = nlohmann::json;
using clock_type = std::chrono::steady_clock;

long long ms_since(clock_type::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - t0)
      .count();
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_real_list(const std::string& s) {
  std::vector<double> out;
  std::string token;
  for (char c : s + ",") {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!token.empty()) {
        out.push_back(std::stod(token));
        token.clear();
      }
    } else {
      token.push_back(c);
    }
  }
  return out;
}

RatioMethod pick_method(RatioMethodChoice choice, int n) {
  switch (choice) {
    case RatioMethodChoice::exact_hull: return RatioMethod::exact_hull;
    case RatioMethodChoice::membership_mc: return RatioMethod::membership_mc;
    case RatioMethodChoice::automatic: break;
  }
  return n <= 5 ? RatioMethod::exact_hull : RatioMethod::membership_mc;
}

}  // namespace

std::vector<long long> resolve_N(const SweepConfig& cfg, int n) {
  std::vector<long long> out;
  if (!cfg.N_list.empty()) {
    out = cfg.N_list;
  } else {
    if (cfg.rule_family.empty() || cfg.rule_multipliers.empty()) {
      throw ConfigError("sweep: need N_list or rule_family + rule_multipliers");
    }
    ThresholdQuery q;
    q.family = threshold_family_from_string(cfg.rule_family);
    q.n = n;
    q.epsilon = cfg.rule_epsilon;
    q.beta_param = cfg.spec.beta_param;
    const double base = threshold_N(q).n_low;
    if (!std::isfinite(base)) {
      throw ConfigError("sweep: threshold rule overflows at n=" + std::to_string(n));
    }
    for (double mult : cfg.rule_multipliers) {
      if (mult <= 0.0) throw ConfigError("sweep: rule multipliers must be > 0");
      const double v = mult * base;
      out.push_back(static_cast<long long>(mult >= 1.0 ? std::ceil(v) : std::floor(v)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (long long N : out) {
    if (N < 1) throw ConfigError("sweep: resolved N < 1");
  }
  return out;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.R < 1 || cfg.M < 0) throw ConfigError("sweep: R must be >= 1, M >= 0");
  if (cfg.n_list.empty()) throw ConfigError("sweep: empty n_list");
  std::vector<int> dims = cfg.n_list;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

  // resolve the whole grid up front so config errors precede any sampling
  std::vector<std::pair<int, long long>> cells;
  for (int n : dims) {
    for (long long N : resolve_N(cfg, n)) cells.emplace_back(n, N);
  }

  const auto t_start = clock_type::now();
  SweepResult res;
  const std::uint64_t stride = 2ULL * (static_cast<std::uint64_t>(cfg.R) + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [n, N] = cells[i];
    DistributionSpec spec = cfg.spec;
    spec.dim = n;
    spec.validate();
    const SeedSpec cell_seed = cfg.seed.with_stream(cfg.seed.stream_id + 1 + i * stride);
    const RatioMethod method = pick_method(cfg.method, n);

    const auto t0 = clock_type::now();
    const RatioEstimate est =
        volume_ratio_mc(spec, N, cfg.R, cfg.M, cell_seed, method, cfg.jobs);
    SweepRow row;
    row.family = kind_name(spec.kind);
    row.n = n;
    row.N = N;
    row.ratio = est.mean;
    row.stderr_ = est.stderr;
    row.R = cfg.R;
    row.M = est.probes_per_replication;
    row.seed = cell_seed.stream_id;
    row.elapsed_ms = ms_since(t0);
    res.rows.push_back(std::move(row));

    if (est.warning) {
      res.diagnostic_failure = true;
      std::ostringstream w;
      w << "indeterminate membership rate " << est.indeterminate_rate << " at n=" << n
        << " N=" << N;
      res.warnings.push_back(w.str());
    }
  }
  res.wall_ms = ms_since(t_start);
  return res;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "#schema=1\n";
  os << "family,n,N,ratio,stderr,R,M,seed,elapsed_ms\n";
  for (const SweepRow& r : rows) {
    os << r.family << "," << r.n << "," << r.N << "," << fmt17(r.ratio) << ","
       << fmt17(r.stderr_) << "," << r.R << "," << r.M << "," << r.seed << ","
       << r.elapsed_ms << "\n";
  }
  return os.str();
}

SandwichReport run_sandwich(const SandwichConfig& cfg) {
  cfg.spec.validate();
  const int n = cfg.spec.dim;
  const auto volK = cfg.spec.support_volume();
  if (!volK) throw std::invalid_argument("run_sandwich: support volume unknown");
  if (cfg.N < 1) throw std::invalid_argument("run_sandwich: N must be >= 1");

  SandwichReport rep;
  rep.vol_K = *volK;

  // A = floating body over 2n axis directions plus a random battery
  std::vector<double> dirs(static_cast<std::size_t>(2 * n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    dirs[static_cast<std::size_t>(2 * k) * n + k] = 1.0;
    dirs[static_cast<std::size_t>(2 * k + 1) * n + k] = -1.0;
  }
  const std::vector<double> rnd =
      random_directions(n, cfg.directions, cfg.seed.with_stream(cfg.seed.stream_id + 1));
  dirs.insert(dirs.end(), rnd.begin(), rnd.end());
  const FloatingBodyApprox body =
      floating_body(cfg.spec, cfg.delta, dirs, cfg.vol_probes,
                    cfg.seed.with_stream(cfg.seed.stream_id + 2000), cfg.jobs);
  rep.vol_A = body.volume_estimate;
  rep.vol_A_stderr = body.volume_stderr;
  const double wet = std::max(0.0, rep.vol_K - rep.vol_A);

  const SampleSet smp =
      sample(cfg.spec, static_cast<std::size_t>(cfg.depth_sample),
             cfg.seed.with_stream(cfg.seed.stream_id + 3000));

  // inf_A q probes: ray-bisected boundary points of A, nudged inward
  std::vector<double> origin(n, 0.0);
  std::vector<double> inner_pts;
  if (body.contains(origin.data())) {
    RngStream rng(cfg.seed.with_stream(cfg.seed.stream_id + 4000));
    std::vector<double> u(n), p(n);
    const double reach = 4.0 * cfg.spec.support_radius() * std::sqrt(n);
    for (int i = 0; i < cfg.boundary_probes; ++i) {
      rng.next_unit_vector(n, u.data());
      double lo = 0.0, hi = reach;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        for (int k = 0; k < n; ++k) p[k] = mid * u[k];
        (body.contains(p.data()) ? lo : hi) = mid;
      }
      for (int k = 0; k < n; ++k) inner_pts.push_back(0.999 * lo * u[k]);
    }
  }
  double inf_q = 1.0;
  if (!inner_pts.empty()) {
    const std::vector<double> depths = depth_empirical_battery(
        inner_pts, static_cast<std::size_t>(cfg.boundary_probes), smp, cfg.depth_budget,
        cfg.seed.with_stream(cfg.seed.stream_id + 5000), cfg.jobs);
    inf_q = *std::min_element(depths.begin(), depths.end());
  }
  rep.inf_q_inside = std::clamp(inf_q, 0.0, 1.0);

  // sup_{A^c} q probes: uniform in conv(support), rejected into the wet part
  std::vector<double> wet_pts;
  {
    RngStream rng(cfg.seed.with_stream(cfg.seed.stream_id + 6000));
    std::vector<double> p(n);
    const long long cap = 10000LL * std::max(1, cfg.wet_probes);
    long long attempts = 0;
    while (static_cast<int>(wet_pts.size()) < cfg.wet_probes * n && attempts < cap) {
      ++attempts;
      sample_support_uniform(cfg.spec, rng, p.data());
      if (!body.contains(p.data())) wet_pts.insert(wet_pts.end(), p.begin(), p.end());
    }
  }
  double sup_q = 0.0;
  const std::size_t wet_found = wet_pts.size() / static_cast<std::size_t>(n);
  if (wet_found > 0) {
    const std::vector<double> depths = depth_empirical_battery(
        wet_pts, wet_found, smp, cfg.depth_budget,
        cfg.seed.with_stream(cfg.seed.stream_id + 7000), cfg.jobs);
    sup_q = *std::max_element(depths.begin(), depths.end());
  }
  rep.sup_q_outside = std::clamp(sup_q, 0.0, 1.0);

  rep.bounds = central_lower(rep.vol_A, rep.inf_q_inside, cfg.N, n);
  rep.bounds.sup_q_outside = rep.sup_q_outside;
  rep.bounds.wet_vol = wet;
  rep.bounds.upper = central_upper(rep.vol_A, rep.sup_q_outside, wet, cfg.N);

  rep.estimate = volume_ratio_mc(cfg.spec, cfg.N, cfg.R, cfg.M,
                                 cfg.seed.with_stream(cfg.seed.stream_id + 10000),
                                 pick_method(RatioMethodChoice::automatic, n), cfg.jobs);
  rep.hull_vol_mean = rep.estimate.mean * rep.vol_K;

  // 3 sigma, pooling the MC error of the estimate with the propagated
  // input-measurement errors (depth error taken as 1/sqrt(sample size))
  const double depth_se = 1.0 / std::sqrt(static_cast<double>(smp.count));
  const double dN = static_cast<double>(cfg.N);
  rep.slack = 3.0 * (rep.estimate.stderr * rep.vol_K + rep.vol_A_stderr +
                     dN * (depth_se * wet + rep.sup_q_outside * rep.vol_A_stderr));

  if (cfg.boundary_probes < 8 || cfg.wet_probes < 8 || cfg.depth_budget < 64 ||
      smp.count < 1000) {
    rep.verdict = "inconclusive";
  } else if (rep.bounds.lower - rep.slack <= rep.hull_vol_mean &&
             rep.hull_vol_mean <= rep.bounds.upper + rep.slack) {
    rep.verdict = "PASS";
  } else {
    rep.verdict = "FAIL";
  }
  return rep;
}

GroemerReport run_groemer_compare(int n, long long N, int R, SeedSpec seed, int jobs) {
  if (n < 2 || n > 3) throw std::invalid_argument("run_groemer_compare: n must be 2 or 3");
  if (N <= n) throw std::invalid_argument("run_groemer_compare: N must exceed n");
  if (R < 2) throw std::invalid_argument("run_groemer_compare: R must be >= 2");
  (void)jobs;  // replications are cheap; kept serial and deterministic

  const DistributionSpec cube = make_cube_solid(n);
  DistributionSpec ball = make_ball(n);
  // equal volume: r^n |B^n| = 2^n
  const double unit_ball_vol = std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
  ball.isotropic_scale = 2.0 / std::pow(unit_ball_vol, 1.0 / n);

  auto run_one = [&](const DistributionSpec& spec, std::uint64_t base, double& mean,
                     double& se) {
    double sum = 0.0, sum2 = 0.0;
    for (int r = 0; r < R; ++r) {
      const SampleSet pts =
          sample(spec, static_cast<std::size_t>(N), seed.with_stream(base + r));
      const double v = hull_volume(build_hull(pts));
      sum += v;
      sum2 += v * v;
    }
    mean = sum / R;
    se = std::sqrt(std::max(0.0, (sum2 / R - mean * mean) / (R - 1)));
  };

  GroemerReport rep;
  rep.n = n;
  rep.N = N;
  rep.R = R;
  run_one(cube, seed.stream_id + 1, rep.cube_mean, rep.cube_stderr);
  run_one(ball, seed.stream_id + 1 + static_cast<std::uint64_t>(R), rep.ball_mean,
          rep.ball_stderr);
  const double pooled =
      std::sqrt(rep.cube_stderr * rep.cube_stderr + rep.ball_stderr * rep.ball_stderr);
  rep.ordering_holds = rep.ball_mean <= rep.cube_mean + 3.0 * pooled;
  return rep;
}

std::string manifest_to_json(const RunManifest& m) {
  json j;
  j["schema"] = m.schema;
  j["command"] = m.command;
  j["config"] = m.config.entries();
  j["wall_ms"] = m.result.wall_ms;
  j["warnings"] = m.result.warnings;
  j["diagnostic_failure"] = m.result.diagnostic_failure;
  json rows = json::array();
  for (const SweepRow& r : m.result.rows) {
    rows.push_back({{"family", r.family},
                    {"n", r.n},
                    {"N", r.N},
                    {"ratio", r.ratio},
                    {"stderr", r.stderr_},
                    {"R", r.R},
                    {"M", r.M},
                    {"seed", r.seed},
                    {"elapsed_ms", r.elapsed_ms}});
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

RunManifest manifest_from_json(const std::string& text) {
  const json j = json::parse(text);
  RunManifest m;
  m.schema = j.at("schema").get<int>();
  if (m.schema != 1) throw ConfigError("manifest: unsupported schema");
  m.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("config").items()) {
    m.config.set(k, v.get<std::string>());
  }
  m.result.wall_ms = j.value("wall_ms", 0LL);
  m.result.diagnostic_failure = j.value("diagnostic_failure", false);
  if (j.contains("warnings")) {
    m.result.warnings = j["warnings"].get<std::vector<std::string>>();
  }
  for (const auto& rj : j.at("rows")) {
    SweepRow r;
    r.family = rj.at("family").get<std::string>();
    r.n = rj.at("n").get<int>();
    r.N = rj.at("N").get<long long>();
    r.ratio = rj.at("ratio").get<double>();
    r.stderr_ = rj.at("stderr").get<double>();
    r.R = rj.at("R").get<int>();
    r.M = rj.at("M").get<int>();
    r.seed = rj.at("seed").get<std::uint64_t>();
    r.elapsed_ms = rj.at("elapsed_ms").get<long long>();
    m.result.rows.push_back(std::move(r));
  }
  return m;
}

void write_manifest(const RunManifest& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open manifest path for writing: " + path);
  out << manifest_to_json(m) << "\n";
  if (!out) throw std::runtime_error("manifest write failed: " + path);
}

RunManifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  std::string line;
  if (!std::getline(in, line) || line.empty()) {
    throw std::runtime_error("empty manifest: " + path);
  }
  return manifest_from_json(line);
}

SweepConfig sweep_config_from(const Config& cfg) {
  SweepConfig sc;
  DistributionSpec spec;
  spec.kind = kind_from_name(cfg.require("dist.kind"));
  spec.dim = static_cast<int>(cfg.int_or("dist.dim", 1));
  spec.beta_param = cfg.real_or("dist.beta", 0.0);
  spec.isotropic_scale = cfg.real_or("dist.scale", 1.0);
  if (cfg.has("dist.table")) {
    spec.product_table = parse_real_list(cfg.require("dist.table"));
  }
  sc.spec = spec;

  for (long long n : cfg.int_list("sweep.n_list")) sc.n_list.push_back(static_cast<int>(n));
  if (cfg.has("sweep.N_list")) sc.N_list = cfg.int_list("sweep.N_list");
  sc.rule_family = cfg.get_or("sweep.rule_family", "");
  if (cfg.has("sweep.rule_multipliers")) {
    sc.rule_multipliers = parse_real_list(cfg.require("sweep.rule_multipliers"));
  }
  sc.rule_epsilon = cfg.real_or("sweep.rule_epsilon", 0.0);
  sc.R = static_cast<int>(cfg.int_or("sweep.R", 16));
  sc.M = static_cast<int>(cfg.int_or("sweep.M", 1024));
  sc.seed = {cfg.u64_or("sweep.seed", 0), cfg.u64_or("sweep.stream", 0)};
  const std::string method = cfg.get_or("sweep.method", "auto");
  if (method == "auto") {
    sc.method = RatioMethodChoice::automatic;
  } else if (method == "exact") {
    sc.method = RatioMethodChoice::exact_hull;
  } else if (method == "membership") {
    sc.method = RatioMethodChoice::membership_mc;
  } else {
    throw ConfigError("sweep.method must be auto|exact|membership");
  }
  return sc;
}

ReplayResult replay(const RunManifest& m, int jobs) {
  if (m.command != "sweep") throw ConfigError("replay: only sweep manifests are supported");
  SweepConfig sc = sweep_config_from(m.config);
  sc.jobs = jobs;
  const SweepResult fresh = run_sweep(sc);

  ReplayResult out;
  out.matched = true;
  if (fresh.rows.size() != m.result.rows.size()) {
    out.matched = false;
    out.mismatches.push_back("row count differs");
  }
  std::vector<SweepRow> rows = fresh.rows;
  const std::size_t common = std::min(rows.size(), m.result.rows.size());
  for (std::size_t i = 0; i < common; ++i) {
    const SweepRow& a = m.result.rows[i];
    SweepRow& b = rows[i];
    const bool same = a.family == b.family && a.n == b.n && a.N == b.N &&
                      fmt17(a.ratio) == fmt17(b.ratio) &&
                      fmt17(a.stderr_) == fmt17(b.stderr_) && a.R == b.R && a.M == b.M &&
                      a.seed == b.seed;
    if (!same) {
      out.matched = false;
      std::ostringstream msg;
      msg << "row " << i << ": recorded " << a.family << "," << a.n << "," << a.N << ","
          << fmt17(a.ratio) << " vs replayed " << b.family << "," << b.n << "," << b.N
          << "," << fmt17(b.ratio);
      out.mismatches.push_back(msg.str());
    }
    b.elapsed_ms = a.elapsed_ms;  // echo the recorded timing for byte-identity
  }
  out.csv = sweep_csv(rows);
  return out;
}

}  // namespace rpvt
