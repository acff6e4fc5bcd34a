#include "rpvt/floating_body.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rpvt/projection.hpp"
#include "rpvt/sampling.hpp"

namespace rpvt {

namespace {

constexpr double kProbTol = 1e-10;  // bisection tolerance in probability units

// Offset t with P(<X, theta> <= t) = 1 - delta, i.e. tail(t) = delta.
double invert_tail(const DistributionSpec& spec, std::span<const double> theta, double delta,
                   SeedSpec seed) {
  const Estimate probe = directional_tail(spec, theta, 0.0, seed);
  if (!probe.exact) {
    // empirical quantile of the projected law
    constexpr std::size_t draws = 1000000;
    RngStream rng(seed);
    std::vector<double> proj(draws);
    std::vector<double> x(spec.dim);
    for (std::size_t i = 0; i < draws; ++i) {
      sample_point(spec, rng, x.data());
      double s = 0.0;
      for (int k = 0; k < spec.dim; ++k) s += x[k] * theta[k];
      proj[i] = s;
    }
    std::sort(proj.begin(), proj.end());
    const std::size_t idx = static_cast<std::size_t>(
        std::min(static_cast<double>(draws - 1), (1.0 - delta) * draws));
    return proj[idx];
  }
  const double h = support_h(spec, theta);
  double lo = -h, hi = h;
  while (hi - lo > kProbTol * 2.0 * h) {
    const double mid = 0.5 * (lo + hi);
    if (directional_tail(spec, theta, mid, seed).value > delta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

bool FloatingBodyApprox::contains(const double* x) const {
  const std::size_t m = offsets.size();
  for (std::size_t j = 0; j < m; ++j) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) s += directions[j * dim + k] * x[k];
    if (s > offsets[j]) return false;
  }
  return true;
}

std::vector<double> random_directions(int dim, int count, SeedSpec seed) {
  RngStream rng(seed);
  std::vector<double> dirs(static_cast<std::size_t>(count) * dim);
  for (int i = 0; i < count; ++i) rng.next_unit_vector(dim, dirs.data() + i * dim);
  return dirs;
}

FloatingBodyApprox floating_body(const DistributionSpec& spec, double delta,
                                 const std::vector<double>& directions, int probes,
                                 SeedSpec seed, int jobs) {
  spec.validate();
  if (delta <= 0.0 || delta > 1.0) {
    throw std::invalid_argument("floating_body: delta must be in (0, 1]");
  }
  const int n = spec.dim;
  const int m = static_cast<int>(directions.size()) / n;
  if (m < 2 * n) throw std::invalid_argument("floating_body: need at least 2n directions");

  FloatingBodyApprox body;
  body.delta = delta;
  body.dim = n;
  body.directions = directions;
  body.offsets.resize(m);
  body.empty_interior_warning = delta > 0.5;

#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
  for (int j = 0; j < m; ++j) {
    std::span<const double> theta{directions.data() + static_cast<std::size_t>(j) * n,
                                  static_cast<std::size_t>(n)};
    body.offsets[j] =
        invert_tail(spec, theta, delta, seed.with_stream(seed.stream_id + 1 + j));
  }

  // volume by probes uniform on conv(support)
  const double support_vol = *spec.support_volume();
  RngStream rng(seed);
  std::vector<double> x(n);
  long long hits = 0;
  for (int i = 0; i < probes; ++i) {
    sample_support_uniform(spec, rng, x.data());
    if (body.contains(x.data())) ++hits;
  }
  const double p = probes > 0 ? static_cast<double>(hits) / probes : 0.0;
  body.volume_estimate = p * support_vol;
  body.volume_stderr =
      probes > 0 ? support_vol * std::sqrt(std::max(p * (1.0 - p), 1.0 / probes) / probes)
                 : 0.0;
  return body;
}

WetPartEstimate wet_part_volume(const DistributionSpec& spec, double delta,
                                const std::vector<double>& directions, int probes,
                                SeedSpec seed, int jobs) {
  const FloatingBodyApprox body = floating_body(spec, delta, directions, probes, seed, jobs);
  return {*spec.support_volume() - body.volume_estimate, body.volume_stderr};
}

}  // namespace rpvt
