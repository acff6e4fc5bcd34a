#pragma once

#include <span>
#include <vector>

#include "rpvt/geom2d.hpp"
#include "rpvt/sampling.hpp"

namespace rpvt {

enum class DepthMode { empirical, analytic2d, exact2d_sample };

struct DepthReport {
  std::vector<double> point;
  double estimate = 0.0;  // in [0, 1]
  int directions_tried = 0;
  int refinement_steps = 0;
  DepthMode mode = DepthMode::empirical;
};

/// Sample half-space depth at x: min over tried unit directions of the
/// fraction of the sample in the closed half-space. Budget splits 70%
/// random directions / 30% local refinement around the current best.
/// Always an over-estimate of the exact sample depth.
DepthReport depth_empirical(std::span<const double> x, const SampleSet& sample, int budget,
                            SeedSpec seed);

/// Batch variant: the random directions are shared across queries (each
/// query still sees the full budget) so the sample can be projected and
/// sorted once per direction. Refinement stays per-query.
std::vector<double> depth_empirical_battery(const std::vector<double>& queries,
                                            std::size_t query_count, const SampleSet& sample,
                                            int budget, SeedSpec seed, int jobs = 0);

/// Exact sample depth in the plane by angular sweep, O(m log m).
DepthReport depth_exact_2d_sample(Vec2 x, const SampleSet& sample);

/// Exact depth of the uniform law on a convex polygon: min over the
/// half-plane angle of cut mass / area, golden-section with multistart.
/// Zero for x outside the body.
double depth_exact_2d_uniform(Vec2 x, const Polygon2D& body);

/// Lower bound (1/16) kappa (1 - norm_K)^{1/kappa}; zero for norm_K > 1.
double kappa_depth_lower_bound(double norm_K, double kappa);

}  // namespace rpvt
