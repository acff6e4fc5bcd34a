#pragma once

#include "rpvt/distribution.hpp"
#include "rpvt/rng.hpp"

namespace rpvt {

enum class RatioMethod {
  exact_hull,     // exact hull volume per replication (dim <= 8)
  membership_mc,  // M uniform probes per replication, min-norm membership
};

/// Two-stage estimate of E|K_N| / |conv(support)|.
struct RatioEstimate {
  double mean = 0.0;
  double stderr = 0.0;
  int replications = 0;
  int probes_per_replication = 0;  // 0 in exact mode
  DistributionSpec spec;
  long long points_per_hull = 0;
  SeedSpec seed;
  RatioMethod method = RatioMethod::exact_hull;
  double indeterminate_rate = 0.0;
  bool warning = false;  // indeterminate membership rate above 0.1%
};

/// OpenMP kernel; replications are independent tasks keyed by stream_id
/// and merged in stream order, so the result is identical for any number
/// of threads (jobs = 0 uses the OpenMP default).
RatioEstimate volume_ratio_mc(const DistributionSpec& spec, long long N, int R, int M,
                              SeedSpec seed, RatioMethod method, int jobs = 0);

/// Serial reference implementation kept for testing; must produce
/// bit-identical results to the parallel kernel.
RatioEstimate volume_ratio_mc_serial(const DistributionSpec& spec, long long N, int R, int M,
                                     SeedSpec seed, RatioMethod method);

}  // namespace rpvt
