#include "rpvt/ratio.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rpvt/hull.hpp"
#include "rpvt/membership.hpp"
#include "rpvt/sampling.hpp"

namespace rpvt {

namespace {

// Streams per replication: one for the hull points, one for the probes.
constexpr std::uint64_t kStreamsPerReplication = 2;

struct RepOutcome {
  double ratio = 0.0;
  long long indeterminate = 0;
  long long probes = 0;
};

RepOutcome run_replication(const DistributionSpec& spec, long long N, int M, SeedSpec seed,
                           std::uint64_t rep, RatioMethod method) {
  RepOutcome out;
  const SeedSpec points_seed =
      seed.with_stream(seed.stream_id + rep * kStreamsPerReplication);
  const SeedSpec probe_seed =
      seed.with_stream(seed.stream_id + rep * kStreamsPerReplication + 1);

  if (N <= spec.dim) return out;  // hull has zero volume

  const SampleSet pts = sample(spec, static_cast<std::size_t>(N), points_seed);

  if (method == RatioMethod::exact_hull) {
    const HullRep hull = build_hull(pts);
    const double vol = hull_volume(hull);
    out.ratio = std::min(1.0, std::max(0.0, vol / *spec.support_volume()));
    return out;
  }

  const double tol = default_membership_tol(pts);
  RngStream rng(probe_seed);
  std::vector<double> probe(spec.dim);
  MembershipScratch scratch;
  long long inside = 0;
  for (int m = 0; m < M; ++m) {
    sample_support_uniform(spec, rng, probe.data());
    const MembershipResult r = membership(probe, pts, tol, 50000, &scratch);
    if (r.status == MembershipStatus::indeterminate) {
      ++out.indeterminate;
      ++inside;  // conservative for lower-bound experiments; rate is tracked
    } else if (r.status == MembershipStatus::inside) {
      ++inside;
    }
  }
  out.probes = M;
  out.ratio = static_cast<double>(inside) / static_cast<double>(M);
  return out;
}

RatioEstimate finalize(const DistributionSpec& spec, long long N, int R, int M, SeedSpec seed,
                       RatioMethod method, const std::vector<RepOutcome>& reps) {
  RatioEstimate est;
  est.spec = spec;
  est.points_per_hull = N;
  est.replications = R;
  est.probes_per_replication = method == RatioMethod::membership_mc ? M : 0;
  est.seed = seed;
  est.method = method;

  double sum = 0.0;
  long long indeterminate = 0, probes = 0;
  for (const RepOutcome& r : reps) {
    sum += r.ratio;
    indeterminate += r.indeterminate;
    probes += r.probes;
  }
  est.mean = sum / R;
  double ss = 0.0;
  for (const RepOutcome& r : reps) {
    const double d = r.ratio - est.mean;
    ss += d * d;
  }
  est.stderr = R > 1 ? std::sqrt(ss / (R - 1.0) / R) : 0.0;
  est.indeterminate_rate =
      probes > 0 ? static_cast<double>(indeterminate) / static_cast<double>(probes) : 0.0;
  est.warning = est.indeterminate_rate > 1e-3;
  return est;
}

void check_args(const DistributionSpec& spec, long long N, int R, int M, RatioMethod method) {
  spec.validate();
  if (N < 1) throw std::invalid_argument("volume_ratio_mc: N must be >= 1");
  if (R < 1) throw std::invalid_argument("volume_ratio_mc: R must be >= 1");
  if (method == RatioMethod::membership_mc && M < 1) {
    throw std::invalid_argument("volume_ratio_mc: M must be >= 1 for membership MC");
  }
  if (method == RatioMethod::exact_hull && spec.dim > 8) {
    throw std::invalid_argument("volume_ratio_mc: exact hulls limited to dim <= 8");
  }
  if (!spec.support_volume()) {
    throw std::invalid_argument("volume_ratio_mc: reference volume unknown for this kind");
  }
}

}  // namespace

RatioEstimate volume_ratio_mc(const DistributionSpec& spec, long long N, int R, int M,
                              SeedSpec seed, RatioMethod method, int jobs) {
  check_args(spec, N, R, M, method);
  std::vector<RepOutcome> reps(R);
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
  for (int r = 0; r < R; ++r) {
    reps[r] = run_replication(spec, N, M, seed, static_cast<std::uint64_t>(r), method);
  }
  return finalize(spec, N, R, M, seed, method, reps);
}

RatioEstimate volume_ratio_mc_serial(const DistributionSpec& spec, long long N, int R, int M,
                                     SeedSpec seed, RatioMethod method) {
  check_args(spec, N, R, M, method);
  std::vector<RepOutcome> reps(R);
  for (int r = 0; r < R; ++r) {
    reps[r] = run_replication(spec, N, M, seed, static_cast<std::uint64_t>(r), method);
  }
  return finalize(spec, N, R, M, seed, method, reps);
}

}  // namespace rpvt
