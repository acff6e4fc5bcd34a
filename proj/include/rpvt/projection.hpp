#pragma once

#include <span>

#include "rpvt/distribution.hpp"
#include "rpvt/rng.hpp"

namespace rpvt {

/// Value with an MC error bar; stderr is 0 when the value is exact.
struct Estimate {
  double value = 0.0;
  double stderr = 0.0;
  bool exact = true;
};

/// P(sum_i a_i U_i <= t) for independent U_i uniform on [-1, 1].
/// Exact piecewise-polynomial formula (inclusion-exclusion over the box
/// corners); coefficients below 1e-12 of the largest are dropped.
double cube_halfspace_cdf(std::span<const double> coeffs, double t);

/// Support function h of conv(support) in direction theta (unit vector),
/// in current (scaled) coordinates.
double support_h(const DistributionSpec& spec, std::span<const double> theta);

/// P(<X, theta> > a) for unit theta. Exact for rotation-invariant kinds
/// (incomplete beta), the solid cube up to dim 16 and cube vertices up to
/// dim 20 (enumeration); MC with stderr otherwise.
Estimate directional_tail(const DistributionSpec& spec, std::span<const double> theta,
                          double a, SeedSpec seed = {});

/// E|<X, theta>|^alpha for unit theta, alpha >= 1. Exact where the tail
/// is exact (quadrature against the exact tail); MC otherwise.
Estimate abs_projection_moment(const DistributionSpec& spec, std::span<const double> theta,
                               double alpha, SeedSpec seed = {});

}  // namespace rpvt
