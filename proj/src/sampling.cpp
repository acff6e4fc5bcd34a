#include "rpvt/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace rpvt {

namespace {

// Inverse-CDF draw from a tabulated density on [-1, 1].
double product_1d_draw(const std::vector<double>& table, RngStream& rng) {
  // CDF by trapezoid on the grid; table is normalized already.
  const std::size_t m = table.size();
  const double h = 2.0 / static_cast<double>(m - 1);
  const double u = rng.next_uniform();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double cell = 0.5 * (table[i] + table[i + 1]) * h;
    if (acc + cell >= u || i + 2 == m) {
      const double frac = cell > 0 ? (u - acc) / cell : 0.0;
      return -1.0 + h * (static_cast<double>(i) + std::min(std::max(frac, 0.0), 1.0));
    }
    acc += cell;
  }
  return 1.0;
}

}  // namespace

void sample_point(const DistributionSpec& spec, RngStream& rng, double* out) {
  const int n = spec.dim;
  const double s = spec.isotropic_scale;
  switch (spec.kind) {
    case Kind::cube_solid:
      for (int i = 0; i < n; ++i) out[i] = s * rng.next_uniform(-1.0, 1.0);
      return;
    case Kind::cube_vertices:
      for (int i = 0; i < n; ++i) out[i] = (rng.next_u64() & 1) ? s : -s;
      return;
    case Kind::sphere: {
      rng.next_unit_vector(n, out);
      for (int i = 0; i < n; ++i) out[i] *= s;
      return;
    }
    case Kind::ball:
    case Kind::beta: {
      // X = r * theta with r^2 ~ Beta(n/2, beta+1); ball is beta = 0.
      const double beta = spec.kind == Kind::ball ? 0.0 : spec.beta_param;
      rng.next_unit_vector(n, out);
      const double r = std::sqrt(rng.next_beta(0.5 * n, beta + 1.0));
      for (int i = 0; i < n; ++i) out[i] *= s * r;
      return;
    }
    case Kind::product_1d:
      for (int i = 0; i < n; ++i) out[i] = s * product_1d_draw(spec.product_table, rng);
      return;
  }
  throw std::logic_error("sample_point: bad kind");
}

void sample_support_uniform(const DistributionSpec& spec, RngStream& rng, double* out) {
  const int n = spec.dim;
  const double s = spec.isotropic_scale;
  if (spec.rotation_invariant()) {
    rng.next_unit_vector(n, out);
    const double r = std::pow(rng.next_uniform(), 1.0 / n);
    for (int i = 0; i < n; ++i) out[i] *= s * r;
  } else {
    for (int i = 0; i < n; ++i) out[i] = s * rng.next_uniform(-1.0, 1.0);
  }
}

SampleSet sample(const DistributionSpec& spec, std::size_t count, SeedSpec seed) {
  spec.validate();
  if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
  SampleSet set;
  set.spec = spec;
  set.seed = seed;
  set.count = count;
  set.dim = spec.dim;
  set.points.resize(count * static_cast<std::size_t>(spec.dim));
  RngStream rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    sample_point(spec, rng, set.points.data() + i * static_cast<std::size_t>(spec.dim));
  }
  return set;
}

}  // namespace rpvt
