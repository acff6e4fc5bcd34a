#pragma once

#include <vector>

#include "rpvt/distribution.hpp"
#include "rpvt/rng.hpp"

namespace rpvt {

/// Outer half-space approximation of the depth superlevel set at level
/// delta: one half-space per direction, each of mass exactly 1 - delta.
struct FloatingBodyApprox {
  double delta = 0.0;
  int dim = 0;
  std::vector<double> directions;  // M x dim unit vectors, row-major
  std::vector<double> offsets;     // P(<X, theta_j> <= offset_j) = 1 - delta
  double volume_estimate = 0.0;    // MC over conv(support) probes
  double volume_stderr = 0.0;
  bool empty_interior_warning = false;  // delta > 1/2 for a symmetric law

  bool contains(const double* x) const;
};

/// Generates M uniformly random directions (deterministic in the seed).
std::vector<double> random_directions(int dim, int count, SeedSpec seed);

/// Offsets by bisection of the exact directional tail (MC quantile where
/// the tail itself is MC); volume by uniform probes from conv(support).
FloatingBodyApprox floating_body(const DistributionSpec& spec, double delta,
                                 const std::vector<double>& directions, int probes,
                                 SeedSpec seed, int jobs = 0);

struct WetPartEstimate {
  double volume = 0.0;
  double stderr = 0.0;
};

/// |conv(support)| minus the floating-body volume estimate.
WetPartEstimate wet_part_volume(const DistributionSpec& spec, double delta,
                                const std::vector<double>& directions, int probes,
                                SeedSpec seed, int jobs = 0);

}  // namespace rpvt
