#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpvt/bounds.hpp"
#include "rpvt/config.hpp"
#include "rpvt/distribution.hpp"
#include "rpvt/ratio.hpp"
#include "rpvt/rng.hpp"

namespace rpvt {

enum class RatioMethodChoice { automatic, exact_hull, membership_mc };

/// One (n, N) grid of hull-volume-ratio estimates.
struct SweepConfig {
  DistributionSpec spec;  // dim is overridden by each entry of n_list
  std::vector<int> n_list;

  // Either an explicit N list, or a threshold rule: N = round(mult * nu(n))
  // with ceil for mult >= 1 and floor for mult < 1.
  std::vector<long long> N_list;
  std::string rule_family;  // threshold family name; empty when N_list given
  std::vector<double> rule_multipliers;
  double rule_epsilon = 0.0;  // epsilon (or c for beta_refined) fed to the rule

  int R = 16;
  int M = 1024;
  SeedSpec seed;
  int jobs = 0;
  RatioMethodChoice method = RatioMethodChoice::automatic;
};

struct SweepRow {
  std::string family;
  int n = 0;
  long long N = 0;
  double ratio = 0.0;
  double stderr_ = 0.0;
  int R = 0;
  int M = 0;
  std::uint64_t seed = 0;  // the cell's stream id
  long long elapsed_ms = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by (n, N)
  std::vector<std::string> warnings;
  bool diagnostic_failure = false;  // indeterminate-membership rate above 0.1%
  long long wall_ms = 0;
};

/// Resolves the N grid for one dimension (throws ConfigError if the rule
/// is unresolvable).
std::vector<long long> resolve_N(const SweepConfig& cfg, int n);

SweepResult run_sweep(const SweepConfig& cfg);

/// `#schema=1` header plus one row per cell; a pure function of the rows.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Central-lemma sandwich on A = floating body at level delta.
struct SandwichConfig {
  DistributionSpec spec;
  long long N = 0;
  double delta = 0.05;
  int directions = 64;      // random directions for A (plus 2n axis ones)
  int R = 64;               // ratio replications
  int M = 0;                // ratio probes (membership mode only)
  SeedSpec seed;
  int jobs = 0;
  int vol_probes = 200000;  // |A| estimate
  int depth_sample = 30000;
  int depth_budget = 512;
  int boundary_probes = 64;  // inf_A q probes (on the boundary of A)
  int wet_probes = 64;       // sup_{A^c} q probes
};

struct SandwichReport {
  BoundsReport bounds;
  RatioEstimate estimate;
  double vol_K = 0.0;
  double vol_A = 0.0;
  double vol_A_stderr = 0.0;
  double inf_q_inside = 0.0;
  double sup_q_outside = 0.0;
  double hull_vol_mean = 0.0;  // estimate.mean * vol_K
  double slack = 0.0;          // 3 sigma allowance on each side
  std::string verdict;         // PASS | FAIL | inconclusive
};

SandwichReport run_sandwich(const SandwichConfig& cfg);

/// Expected hull volume of N uniform points: cube [-1,1]^n against the
/// ball of equal volume (exact hull volumes; n in {2, 3}).
struct GroemerReport {
  int n = 0;
  long long N = 0;
  int R = 0;
  double cube_mean = 0.0;
  double cube_stderr = 0.0;
  double ball_mean = 0.0;
  double ball_stderr = 0.0;
  bool ordering_holds = false;  // ball <= cube + 3 pooled sigma
};

GroemerReport run_groemer_compare(int n, long long N, int R, SeedSpec seed, int jobs = 0);

/// Self-contained reproduction record for a sweep: config echo, resolved
/// grid, per-cell seeds and timings, warnings, and the data rows.
struct RunManifest {
  int schema = 1;
  std::string command;  // "sweep"
  Config config;        // enough to re-run
  SweepResult result;
};

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);
void write_manifest(const RunManifest& m, const std::string& path);
RunManifest read_manifest(const std::string& path);

SweepConfig sweep_config_from(const Config& cfg);

struct ReplayResult {
  std::string csv;  // elapsed_ms echoed from the manifest rows
  bool matched = false;
  std::vector<std::string> mismatches;
};

/// Re-runs the manifest's sweep and compares every data column (all but
/// elapsed_ms) against the recorded rows.
ReplayResult replay(const RunManifest& m, int jobs);

}  // namespace rpvt
