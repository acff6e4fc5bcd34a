#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpvt/bounds.hpp"
#include "rpvt/centroid_body.hpp"
#include "rpvt/config.hpp"
#include "rpvt/depth.hpp"
#include "rpvt/experiments.hpp"
#include "rpvt/floating_body.hpp"
#include "rpvt/ratio.hpp"
#include "rpvt/sampling.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDiagnostic = 3;
constexpr int kExitIo = 4;

struct GlobalOpts {
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string out;
  std::string format = "jsonl";
  std::string config_path;
};

// returns kExitIo on failure instead of throwing
int emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(g.out);
  if (!f) {
    std::cerr << "cannot open output path: " << g.out << "\n";
    return kExitIo;
  }
  f << text;
  if (!f) {
    std::cerr << "write failed: " << g.out << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int emit_record(const GlobalOpts& g, const json& j) {
  if (g.format == "csv") {
    std::ostringstream header, row;
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (v.is_array() || v.is_object()) continue;  // scalars only in csv mode
      header << (first ? "" : ",") << k;
      row << (first ? "" : ",") << (v.is_string() ? v.get<std::string>() : v.dump());
      first = false;
    }
    return emit(g, header.str() + "\n" + row.str() + "\n");
  }
  return emit(g, j.dump() + "\n");
}

rpvt::DistributionSpec spec_from_flags(const std::string& family, int n, double beta,
                                       double scale, bool isotropic) {
  rpvt::DistributionSpec spec;
  spec.kind = rpvt::kind_from_name(family);
  spec.dim = n;
  spec.beta_param = beta;
  spec.isotropic_scale = scale;
  spec.validate();
  if (isotropic) spec = rpvt::isotropize(spec);
  return spec;
}

std::vector<double> parse_point(const std::string& s) {
  std::vector<double> out;
  std::string token;
  for (char c : s + ",") {
    if (c == ',') {
      if (!token.empty()) out.push_back(std::stod(token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  return out;
}

char fmt_buf[64];
std::string fmt17(double v) {
  std::snprintf(fmt_buf, sizeof fmt_buf, "%.17g", v);
  return fmt_buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random-polytope volume thresholds toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--jobs", g.jobs, "worker threads (0 = default)");
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--format", g.format, "csv|jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--config", g.config_path, "config file path");

  std::string family = "cube_solid";
  int n = 2;
  double beta = 0.0;
  double scale = 1.0;
  bool isotropic = false;
  auto add_dist_flags = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "distribution family");
    cmd->add_option("--n", n, "dimension");
    cmd->add_option("--beta", beta, "beta parameter (beta family)");
    cmd->add_option("--scale", scale, "support scale");
    cmd->add_flag("--isotropic", isotropic, "rescale to identity covariance");
  };

  auto* c_sample = app.add_subcommand("sample", "draw points from a family");
  add_dist_flags(c_sample);
  long long count = 100;
  c_sample->add_option("--count", count, "number of points");

  auto* c_ratio = app.add_subcommand("ratio", "E|hull| / |conv(support)| estimate");
  add_dist_flags(c_ratio);
  long long N = 10;
  int R = 64, M = 1024;
  std::string method = "auto";
  c_ratio->add_option("--N", N, "points per hull");
  c_ratio->add_option("--R", R, "replications");
  c_ratio->add_option("--M", M, "membership probes per replication");
  c_ratio->add_option("--method", method, "auto|exact|membership")
      ->check(CLI::IsMember({"auto", "exact", "membership"}));

  auto* c_depth = app.add_subcommand("depth", "half-space depth of a point");
  add_dist_flags(c_depth);
  std::string point_str = "0";
  long long depth_sample = 100000;
  int budget = 1024;
  bool exact2d = false;
  c_depth->add_option("--point", point_str, "comma-separated coordinates");
  c_depth->add_option("--sample", depth_sample, "sample size");
  c_depth->add_option("--budget", budget, "direction budget");
  c_depth->add_flag("--exact2d", exact2d, "exact sample depth (dim 2 only)");

  auto* c_float = app.add_subcommand("floating-body", "floating body volume");
  add_dist_flags(c_float);
  double delta = 0.05;
  int directions = 64;
  int probes = 200000;
  c_float->add_option("--delta", delta, "depth level");
  c_float->add_option("--directions", directions, "random directions (plus 2n axis)");
  c_float->add_option("--probes", probes, "volume probes");

  auto* c_centroid = app.add_subcommand("centroid-body", "centroid body outer volume");
  add_dist_flags(c_centroid);
  double alpha = 2.0;
  c_centroid->add_option("--alpha", alpha, "moment order");
  c_centroid->add_option("--directions", directions, "random directions");
  c_centroid->add_option("--probes", probes, "volume probes");

  auto* c_bounds = app.add_subcommand("bounds", "central sandwich calculator");
  double volA = 0.0, infq = 0.0, supq = 0.0, wet = 0.0;
  c_bounds->add_option("--volA", volA)->required();
  c_bounds->add_option("--infq", infq)->required();
  c_bounds->add_option("--supq", supq)->required();
  c_bounds->add_option("--wet", wet)->required();
  c_bounds->add_option("--N", N)->required();
  c_bounds->add_option("--n", n)->required();

  auto* c_thresh = app.add_subcommand("thresholds", "crossover sample counts");
  std::string tfamily = "cube_vertices";
  double epsilon = 0.0;
  c_thresh->add_option("--family", tfamily, "threshold family");
  c_thresh->add_option("--n", n, "dimension");
  c_thresh->add_option("--epsilon", epsilon, "epsilon (or c for beta_refined)");
  c_thresh->add_option("--beta", beta, "beta parameter");

  auto* c_sweep = app.add_subcommand("sweep", "(n, N) ratio grid from a config");
  std::string manifest_path;
  c_sweep->add_option("--manifest", manifest_path, "write a replayable manifest here");

  auto* c_sandwich = app.add_subcommand("sandwich", "central-lemma sandwich experiment");
  add_dist_flags(c_sandwich);
  c_sandwich->add_option("--N", N, "points per hull");
  c_sandwich->add_option("--delta", delta, "floating body level");
  c_sandwich->add_option("--directions", directions, "random directions");
  c_sandwich->add_option("--R", R, "ratio replications");
  c_sandwich->add_option("--M", M, "ratio probes (membership mode)");

  auto* c_groemer = app.add_subcommand("groemer", "cube vs equal-volume ball hulls");
  c_groemer->add_option("--n", n, "dimension (2 or 3)");
  c_groemer->add_option("--N", N, "points per hull");
  c_groemer->add_option("--R", R, "replications");

  auto* c_replay = app.add_subcommand("replay", "re-run a manifest and compare");
  std::string replay_path;
  c_replay->add_option("manifest", replay_path, "manifest path")->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();  // global flags may follow the subcommand name
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  const rpvt::SeedSpec seed{g.seed, 0};
  try {
    if (c_sample->parsed()) {
      const auto spec = spec_from_flags(family, n, beta, scale, isotropic);
      const auto pts = rpvt::sample(spec, static_cast<std::size_t>(count), seed);
      std::ostringstream os;
      for (std::size_t i = 0; i < pts.count; ++i) {
        for (int k = 0; k < pts.dim; ++k) {
          os << (k ? "," : "") << fmt17(pts.points[i * pts.dim + k]);
        }
        os << "\n";
      }
      return emit(g, os.str());
    }

    if (c_ratio->parsed()) {
      const auto spec = spec_from_flags(family, n, beta, scale, isotropic);
      const rpvt::RatioMethod rm =
          method == "exact" ? rpvt::RatioMethod::exact_hull
          : method == "membership"
              ? rpvt::RatioMethod::membership_mc
              : (n <= 5 ? rpvt::RatioMethod::exact_hull : rpvt::RatioMethod::membership_mc);
      const auto est = rpvt::volume_ratio_mc(spec, N, R, M, seed, rm, g.jobs);
      json j{{"family", rpvt::kind_name(spec.kind)},
             {"n", n},
             {"N", N},
             {"ratio", est.mean},
             {"stderr", est.stderr},
             {"R", est.replications},
             {"M", est.probes_per_replication},
             {"indeterminate_rate", est.indeterminate_rate}};
      const int rc = emit_record(g, j);
      if (rc != kExitOk) return rc;
      if (est.warning) {
        std::cerr << "indeterminate membership rate above 0.1%\n";
        return kExitDiagnostic;
      }
      return kExitOk;
    }

    if (c_depth->parsed()) {
      const auto spec = spec_from_flags(family, n, beta, scale, isotropic);
      const auto x = parse_point(point_str);
      if (static_cast<int>(x.size()) != spec.dim) {
        std::cerr << "point dimension mismatch\n";
        return kExitConfig;
      }
      const auto pts =
          rpvt::sample(spec, static_cast<std::size_t>(depth_sample), seed);
      json j{{"family", rpvt::kind_name(spec.kind)}, {"n", n}};
      if (exact2d) {
        if (spec.dim != 2) {
          std::cerr << "--exact2d requires n=2\n";
          return kExitConfig;
        }
        const auto rep = rpvt::depth_exact_2d_sample({x[0], x[1]}, pts);
        j["depth"] = rep.estimate;
        j["mode"] = "exact2d_sample";
      } else {
        const auto rep = rpvt::depth_empirical(x, pts, budget, seed.with_stream(1));
        j["depth"] = rep.estimate;
        j["mode"] = "empirical";
      }
      return emit_record(g, j);
    }

    if (c_float->parsed()) {
      const auto spec = spec_from_flags(family, n, beta, scale, isotropic);
      std::vector<double> dirs(static_cast<std::size_t>(2 * n) * n, 0.0);
      for (int k = 0; k < n; ++k) {
        dirs[static_cast<std::size_t>(2 * k) * n + k] = 1.0;
        dirs[static_cast<std::size_t>(2 * k + 1) * n + k] = -1.0;
      }
      const auto rnd = rpvt::random_directions(n, directions, seed.with_stream(1));
      dirs.insert(dirs.end(), rnd.begin(), rnd.end());
      const auto body =
          rpvt::floating_body(spec, delta, dirs, probes, seed.with_stream(2), g.jobs);
      json j{{"family", rpvt::kind_name(spec.kind)},
             {"n", n},
             {"delta", delta},
             {"volume", body.volume_estimate},
             {"stderr", body.volume_stderr},
             {"empty_interior_warning", body.empty_interior_warning}};
      return emit_record(g, j);
    }

    if (c_centroid->parsed()) {
      const auto spec = spec_from_flags(family, n, beta, scale, isotropic);
      const auto body =
          rpvt::centroid_outer_volume(spec, alpha, directions, probes, seed, g.jobs);
      json j{{"family", rpvt::kind_name(spec.kind)},
             {"n", n},
             {"alpha", alpha},
             {"outer_volume", body.outer_volume},
             {"stderr", body.outer_volume_stderr},
             {"out_of_paouris_regime", body.out_of_paouris_regime}};
      return emit_record(g, j);
    }

    if (c_bounds->parsed()) {
      const auto rep = rpvt::central_lower(volA, infq, N, n);
      const double upper = rpvt::central_upper(volA, supq, wet, N);
      json j{{"lower", rep.lower},         {"lower_raw", rep.lower_raw},
             {"upper", upper},             {"clamped", rep.clamped},
             {"degenerate", rep.degenerate}};
      return emit_record(g, j);
    }

    if (c_thresh->parsed()) {
      rpvt::ThresholdQuery q;
      q.family = rpvt::threshold_family_from_string(tfamily);
      q.n = n;
      q.epsilon = epsilon;
      q.beta_param = beta;
      const auto res = rpvt::threshold_N(q);
      json j{{"family", tfamily},         {"n", n},
             {"N_low", res.n_low},        {"N_high", res.n_high},
             {"log_N_low", res.log_n_low}, {"log_N_high", res.log_n_high}};
      return emit_record(g, j);
    }

    if (c_sweep->parsed()) {
      if (g.config_path.empty()) {
        std::cerr << "sweep requires --config\n";
        return kExitConfig;
      }
      rpvt::Config cfg;
      try {
        cfg = rpvt::Config::parse_file(g.config_path);
      } catch (const rpvt::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return g.config_path.empty() || std::ifstream(g.config_path).good() ? kExitConfig
                                                                            : kExitIo;
      }
      if (app.count("--seed")) cfg.set("sweep.seed", std::to_string(g.seed));
      auto sc = rpvt::sweep_config_from(cfg);
      sc.jobs = g.jobs;
      const auto res = rpvt::run_sweep(sc);
      if (!manifest_path.empty()) {
        rpvt::RunManifest m;
        m.command = "sweep";
        m.config = cfg;
        m.result = res;
        try {
          rpvt::write_manifest(m, manifest_path);
        } catch (const std::runtime_error& e) {
          std::cerr << e.what() << "\n";
          return kExitIo;
        }
      }
      const int rc = emit(g, rpvt::sweep_csv(res.rows));
      if (rc != kExitOk) return rc;
      for (const auto& w : res.warnings) std::cerr << w << "\n";
      return res.diagnostic_failure ? kExitDiagnostic : kExitOk;
    }

    if (c_sandwich->parsed()) {
      rpvt::SandwichConfig sc;
      sc.spec = spec_from_flags(family, n, beta, scale, isotropic);
      sc.N = N;
      sc.delta = delta;
      sc.directions = directions;
      sc.R = R;
      sc.M = M;
      sc.seed = seed;
      sc.jobs = g.jobs;
      const auto rep = rpvt::run_sandwich(sc);
      json j{{"family", rpvt::kind_name(sc.spec.kind)},
             {"n", n},
             {"N", N},
             {"delta", delta},
             {"lower", rep.bounds.lower},
             {"upper", rep.bounds.upper},
             {"hull_vol_mean", rep.hull_vol_mean},
             {"vol_A", rep.vol_A},
             {"inf_q_inside", rep.inf_q_inside},
             {"sup_q_outside", rep.sup_q_outside},
             {"slack", rep.slack},
             {"verdict", rep.verdict}};
      const int rc = emit_record(g, j);
      if (rc != kExitOk) return rc;
      return rep.estimate.warning ? kExitDiagnostic : kExitOk;
    }

    if (c_groemer->parsed()) {
      const auto rep = rpvt::run_groemer_compare(n, N, R, seed, g.jobs);
      json j{{"n", rep.n},
             {"N", rep.N},
             {"R", rep.R},
             {"cube_mean", rep.cube_mean},
             {"cube_stderr", rep.cube_stderr},
             {"ball_mean", rep.ball_mean},
             {"ball_stderr", rep.ball_stderr},
             {"ordering_holds", rep.ordering_holds}};
      return emit_record(g, j);
    }

    if (c_replay->parsed()) {
      rpvt::RunManifest m;
      try {
        m = rpvt::read_manifest(replay_path);
      } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
      }
      const auto res = rpvt::replay(m, g.jobs);
      const int rc = emit(g, res.csv);
      if (rc != kExitOk) return rc;
      for (const auto& msg : res.mismatches) std::cerr << msg << "\n";
      return res.matched ? kExitOk : kExitDiagnostic;
    }
  } catch (const rpvt::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << "\n";
    return kExitDiagnostic;
  }
  return kExitOk;
}
