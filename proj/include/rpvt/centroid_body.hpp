#pragma once

#include <span>
#include <vector>

#include "rpvt/distribution.hpp"
#include "rpvt/rng.hpp"

namespace rpvt {

/// Outer polytopal approximation of the L_alpha centroid body: the
/// intersection of {<x, theta_j> <= h(theta_j)} over a direction battery.
/// Outer volume over-estimates the true body volume.
struct CentroidBodyApprox {
  double alpha = 1.0;
  int dim = 0;
  DistributionSpec spec;
  std::vector<double> directions;      // M x dim, row-major
  std::vector<double> support_values;  // h(theta_j) = (E|<X,theta_j>|^alpha)^{1/alpha}
  double outer_volume = 0.0;
  double outer_volume_stderr = 0.0;
  bool out_of_paouris_regime = false;  // alpha outside [2, n]
};

/// Support function of Z_alpha: (E|<X, theta>|^alpha)^{1/alpha}.
double centroid_support(const DistributionSpec& spec, double alpha,
                        std::span<const double> theta, SeedSpec seed = {});

/// Outer volume over M random directions plus the 2n axis directions
/// (the axis constraints give the MC bounding box).
CentroidBodyApprox centroid_outer_volume(const DistributionSpec& spec, double alpha,
                                         int directions, int probes, SeedSpec seed,
                                         int jobs = 0);

struct InclusionReport {
  int trials = 0;
  int violations = 0;        // points of {Lambda* < alpha} outside 4e Z_alpha
  double max_ratio = 0.0;    // max <x,theta>/(4e h) observed (tightness)
  int reverse_trials = 0;
  int reverse_violations = 0;  // boundary of Z_alpha/(2^{1/alpha} e) with Lambda* >= alpha
};

/// Samples the Cramer sublevel set {Lambda* < alpha} by hit-and-run and
/// checks the containment in 4e Z_alpha over a direction battery; also
/// checks the reverse inclusion Z_alpha subset 2^{1/alpha} e {Lambda* < alpha}
/// on sampled boundary points of the outer approximation.
InclusionReport inclusion_check_LqZ(const DistributionSpec& spec, double alpha, int trials,
                                    int directions, SeedSpec seed);

/// |Z_alpha|^{1/n} / sqrt(alpha/n) via the outer-volume over-estimate.
double paouris_ratio(const DistributionSpec& spec, double alpha, int directions, int probes,
                     SeedSpec seed, int jobs = 0);

}  // namespace rpvt
