#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rpvt/distribution.hpp"
#include "rpvt/rng.hpp"

namespace rpvt {

/// Seeded batch of i.i.d. draws with provenance. Row-major count x dim.
struct SampleSet {
  DistributionSpec spec;
  SeedSpec seed;
  std::size_t count = 0;
  int dim = 0;
  std::vector<double> points;

  std::span<const double> point(std::size_t i) const {
    return {points.data() + i * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
  }
};

SampleSet sample(const DistributionSpec& spec, std::size_t count, SeedSpec seed);

/// Draws one point from the law into out[0..dim).
void sample_point(const DistributionSpec& spec, RngStream& rng, double* out);

/// Uniform draw from conv(support) of the spec (solid cube for cube kinds
/// and product_1d, solid ball for the rotation-invariant kinds).
void sample_support_uniform(const DistributionSpec& spec, RngStream& rng, double* out);

}  // namespace rpvt
