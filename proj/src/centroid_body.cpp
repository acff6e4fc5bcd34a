#include "rpvt/centroid_body.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rpvt/cramer.hpp"
#include "rpvt/floating_body.hpp"
#include "rpvt/projection.hpp"

namespace rpvt {

namespace {

constexpr double kFourE = 4.0 * M_E;

// Chord endpoint of the convex set {Lambda* < alpha} along x + t u, t > 0.
double sublevel_boundary(const DistributionSpec& spec, double alpha,
                         const std::vector<double>& x, const std::vector<double>& u,
                         double reach) {
  const int n = spec.dim;
  std::vector<double> y(n);
  auto rate_at = [&](double t) {
    for (int k = 0; k < n; ++k) y[k] = x[k] + t * u[k];
    return cramer_rate(spec, y).value;
  };
  double t_in = 0.0;
  double t_out = reach;
  if (rate_at(t_out) < alpha) return t_out;
  // walk in until a strictly interior point brackets the level crossing
  double probe = 0.5 * reach;
  while (probe > 1e-12 && rate_at(probe) >= alpha) {
    t_out = probe;
    probe *= 0.5;
  }
  t_in = probe > 1e-12 ? probe : 0.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (t_in + t_out);
    if (rate_at(mid) < alpha) {
      t_in = mid;
    } else {
      t_out = mid;
    }
  }
  return t_in;
}

}  // namespace

double centroid_support(const DistributionSpec& spec, double alpha,
                        std::span<const double> theta, SeedSpec seed) {
  if (alpha < 1.0) throw std::invalid_argument("centroid_support: alpha must be >= 1");
  const Estimate m = abs_projection_moment(spec, theta, alpha, seed);
  return std::pow(m.value, 1.0 / alpha);
}

CentroidBodyApprox centroid_outer_volume(const DistributionSpec& spec, double alpha,
                                         int directions, int probes, SeedSpec seed,
                                         int jobs) {
  spec.validate();
  const int n = spec.dim;
  CentroidBodyApprox body;
  body.alpha = alpha;
  body.dim = n;
  body.spec = spec;
  body.out_of_paouris_regime = alpha < 2.0 || alpha > static_cast<double>(n);

  // battery: the 2n axis directions first (they bound the MC box), then
  // random directions
  body.directions.assign(static_cast<std::size_t>(2 * n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    body.directions[static_cast<std::size_t>(2 * k) * n + k] = 1.0;
    body.directions[static_cast<std::size_t>(2 * k + 1) * n + k] = -1.0;
  }
  const std::vector<double> rnd =
      random_directions(n, std::max(0, directions), seed.with_stream(seed.stream_id + 1));
  body.directions.insert(body.directions.end(), rnd.begin(), rnd.end());
  const int m = static_cast<int>(body.directions.size()) / n;

  body.support_values.resize(m);
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
  for (int j = 0; j < m; ++j) {
    std::span<const double> theta{body.directions.data() + static_cast<std::size_t>(j) * n,
                                  static_cast<std::size_t>(n)};
    body.support_values[j] =
        centroid_support(spec, alpha, theta, seed.with_stream(seed.stream_id + 2 + j));
  }

  double box_vol = 1.0;
  std::vector<double> half(n);
  for (int k = 0; k < n; ++k) {
    half[k] = std::max(body.support_values[2 * k], body.support_values[2 * k + 1]);
    box_vol *= 2.0 * half[k];
  }

  RngStream rng(seed);
  std::vector<double> x(n);
  long long hits = 0;
  for (int i = 0; i < probes; ++i) {
    for (int k = 0; k < n; ++k) x[k] = rng.next_uniform(-half[k], half[k]);
    bool inside = true;
    for (int j = 0; j < m && inside; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += body.directions[static_cast<std::size_t>(j) * n + k] * x[k];
      inside = s <= body.support_values[j];
    }
    if (inside) ++hits;
  }
  const double p = probes > 0 ? static_cast<double>(hits) / probes : 0.0;
  body.outer_volume = p * box_vol;
  body.outer_volume_stderr =
      probes > 0 ? box_vol * std::sqrt(std::max(p * (1.0 - p), 1.0 / probes) / probes) : 0.0;
  return body;
}

InclusionReport inclusion_check_LqZ(const DistributionSpec& spec, double alpha, int trials,
                                    int directions, SeedSpec seed) {
  spec.validate();
  if (alpha < 2.0) throw std::invalid_argument("inclusion_check_LqZ: alpha must be >= 2");
  const int n = spec.dim;
  const double reach = 4.0 * support_h(spec, std::vector<double>(n, 1.0 / std::sqrt(n)));

  // fixed direction battery with precomputed support values
  const std::vector<double> battery =
      random_directions(n, directions, seed.with_stream(seed.stream_id + 1));
  std::vector<double> h(directions);
  for (int j = 0; j < directions; ++j) {
    std::span<const double> theta{battery.data() + static_cast<std::size_t>(j) * n,
                                  static_cast<std::size_t>(n)};
    h[j] = centroid_support(spec, alpha, theta, seed.with_stream(seed.stream_id + 2 + j));
  }

  InclusionReport rep;
  rep.trials = trials;
  rep.reverse_trials = trials;

  RngStream rng(seed);
  std::vector<double> x(n, 0.0);
  std::vector<double> u(n);
  if (cramer_rate(spec, x).value >= alpha) {
    throw std::runtime_error("inclusion_check_LqZ: level set has no interior at the origin");
  }

  // hit-and-run inside the convex sublevel set
  const int burn_in = 10 * n * n;
  auto step = [&]() {
    rng.next_unit_vector(n, u.data());
    const double t_plus = sublevel_boundary(spec, alpha, x, u, reach);
    for (double& c : u) c = -c;
    const double t_minus = sublevel_boundary(spec, alpha, x, u, reach);
    for (double& c : u) c = -c;
    const double t = rng.next_uniform(-t_minus, t_plus);
    for (int k = 0; k < n; ++k) x[k] += t * u[k];
  };
  for (int i = 0; i < burn_in; ++i) step();

  for (int trial = 0; trial < trials; ++trial) {
    for (int s = 0; s < n; ++s) step();
    bool violated = false;
    for (int j = 0; j < directions; ++j) {
      double sdot = 0.0;
      for (int k = 0; k < n; ++k) sdot += battery[static_cast<std::size_t>(j) * n + k] * x[k];
      const double ratio = sdot / (kFourE * h[j]);
      rep.max_ratio = std::max(rep.max_ratio, ratio);
      if (ratio > 1.0 + 1e-9) violated = true;
    }
    if (violated) ++rep.violations;
  }

  // reverse inclusion: boundary points of (the outer approximation of)
  // Z_alpha, scaled by 1/(2^{1/alpha} e), must satisfy Lambda* < alpha
  const double shrink = 1.0 / (std::pow(2.0, 1.0 / alpha) * M_E);
  std::vector<double> dir(n);
  std::vector<double> pt(n);
  for (int trial = 0; trial < trials; ++trial) {
    rng.next_unit_vector(n, dir.data());
    double radius = 1e300;
    for (int j = 0; j < directions; ++j) {
      double c = 0.0;
      for (int k = 0; k < n; ++k) c += battery[static_cast<std::size_t>(j) * n + k] * dir[k];
      if (c > 1e-9) radius = std::min(radius, h[j] / c);
    }
    if (radius >= 1e300) continue;
    for (int k = 0; k < n; ++k) pt[k] = shrink * radius * dir[k];
    if (!(cramer_rate(spec, pt).value < alpha)) ++rep.reverse_violations;
  }
  return rep;
}

double paouris_ratio(const DistributionSpec& spec, double alpha, int directions, int probes,
                     SeedSpec seed, int jobs) {
  const CentroidBodyApprox body =
      centroid_outer_volume(spec, alpha, directions, probes, seed, jobs);
  return std::pow(body.outer_volume, 1.0 / spec.dim) / std::sqrt(alpha / spec.dim);
}

}  // namespace rpvt
