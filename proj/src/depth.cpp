#include "rpvt/depth.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rpvt {

namespace {

double halfspace_fraction(std::span<const double> x, const SampleSet& sample,
                          const double* theta) {
  const int d = sample.dim;
  const double* pts = sample.points.data();
  double tx = 0.0;
  for (int k = 0; k < d; ++k) tx += x[k] * theta[k];
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < sample.count; ++i) {
    double s = 0.0;
    const double* p = pts + i * d;
    for (int k = 0; k < d; ++k) s += p[k] * theta[k];
    if (s >= tx) ++cnt;
  }
  return static_cast<double>(cnt) / static_cast<double>(sample.count);
}

// Refine around the best direction by shrinking Gaussian perturbations.
double refine(std::span<const double> x, const SampleSet& sample, RngStream& rng,
              std::vector<double>& best_dir, double best_val, int steps) {
  const int d = sample.dim;
  std::vector<double> cand(d);
  double sigma = 0.5;
  for (int s = 0; s < steps; ++s) {
    double n2 = 0.0;
    for (int k = 0; k < d; ++k) {
      cand[k] = best_dir[k] + sigma * rng.next_normal();
      n2 += cand[k] * cand[k];
    }
    if (n2 < 1e-24) continue;
    const double inv = 1.0 / std::sqrt(n2);
    for (int k = 0; k < d; ++k) cand[k] *= inv;
    const double v = halfspace_fraction(x, sample, cand.data());
    if (v < best_val) {
      best_val = v;
      best_dir = cand;
      sigma = std::min(0.5, sigma * 1.5);
    } else {
      sigma *= 0.9;
    }
  }
  return best_val;
}

}  // namespace

DepthReport depth_empirical(std::span<const double> x, const SampleSet& sample, int budget,
                            SeedSpec seed) {
  if (budget < 1) throw std::invalid_argument("depth_empirical: budget must be >= 1");
  const int d = sample.dim;
  RngStream rng(seed);
  const int random_dirs = std::max(1, static_cast<int>(budget * 0.7));
  const int refine_dirs = budget - random_dirs;

  std::vector<double> theta(d);
  std::vector<double> best_dir(d, 0.0);
  best_dir[0] = 1.0;
  double best = 1.0;
  for (int i = 0; i < random_dirs; ++i) {
    rng.next_unit_vector(d, theta.data());
    const double v = halfspace_fraction(x, sample, theta.data());
    if (v < best) {
      best = v;
      best_dir = theta;
    }
  }
  best = refine(x, sample, rng, best_dir, best, refine_dirs);

  DepthReport rep;
  rep.point.assign(x.begin(), x.end());
  rep.estimate = best;
  rep.directions_tried = budget;
  rep.refinement_steps = refine_dirs;
  rep.mode = DepthMode::empirical;
  return rep;
}

std::vector<double> depth_empirical_battery(const std::vector<double>& queries,
                                            std::size_t query_count, const SampleSet& sample,
                                            int budget, SeedSpec seed, int jobs) {
  const int d = sample.dim;
  if (queries.size() != query_count * static_cast<std::size_t>(d)) {
    throw std::invalid_argument("depth_empirical_battery: query buffer size mismatch");
  }
  const int random_dirs = std::max(1, static_cast<int>(budget * 0.7));
  const int refine_dirs = budget - random_dirs;
  const std::size_t m = sample.count;

  std::vector<double> best(query_count, 1.0);
  std::vector<double> best_dirs(query_count * static_cast<std::size_t>(d), 0.0);
  for (std::size_t q = 0; q < query_count; ++q) best_dirs[q * d] = 1.0;

  // Shared random directions: project the sample once per direction and
  // sort, then each query is one binary search.
  RngStream dir_rng(seed);
  std::vector<double> theta(d);
  std::vector<double> proj(m);
  for (int i = 0; i < random_dirs; ++i) {
    dir_rng.next_unit_vector(d, theta.data());
    const double* pts = sample.points.data();
#pragma omp parallel for schedule(static) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
    for (long long j = 0; j < static_cast<long long>(m); ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += pts[j * d + k] * theta[k];
      proj[j] = s;
    }
    std::sort(proj.begin(), proj.end());
    for (std::size_t q = 0; q < query_count; ++q) {
      double tx = 0.0;
      for (int k = 0; k < d; ++k) tx += queries[q * d + k] * theta[k];
      const std::size_t idx =
          std::lower_bound(proj.begin(), proj.end(), tx) - proj.begin();
      const double v = static_cast<double>(m - idx) / static_cast<double>(m);
      if (v < best[q]) {
        best[q] = v;
        for (int k = 0; k < d; ++k) best_dirs[q * d + k] = theta[k];
      }
    }
  }

#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
  for (long long q = 0; q < static_cast<long long>(query_count); ++q) {
    RngStream rng(seed.with_stream(seed.stream_id + 1 + static_cast<std::uint64_t>(q)));
    std::vector<double> dir(best_dirs.begin() + q * d, best_dirs.begin() + (q + 1) * d);
    std::span<const double> x{queries.data() + q * d, static_cast<std::size_t>(d)};
    best[q] = refine(x, sample, rng, dir, best[q], refine_dirs);
  }
  return best;
}

DepthReport depth_exact_2d_sample(Vec2 x, const SampleSet& sample) {
  if (sample.dim != 2) throw std::invalid_argument("depth_exact_2d_sample: dim must be 2");
  const std::size_t m = sample.count;
  std::vector<double> angles;
  angles.reserve(m);
  std::size_t at_x = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = sample.points[2 * i] - x.x;
    const double dy = sample.points[2 * i + 1] - x.y;
    if (dx == 0.0 && dy == 0.0) {
      ++at_x;  // coincident points lie in every closed half-plane
    } else {
      angles.push_back(std::atan2(dy, dx));
    }
  }
  DepthReport rep;
  rep.point = {x.x, x.y};
  rep.mode = DepthMode::exact2d_sample;
  rep.directions_tried = static_cast<int>(2 * angles.size());
  if (angles.empty()) {
    rep.estimate = static_cast<double>(at_x) / static_cast<double>(m);
    return rep;
  }
  std::sort(angles.begin(), angles.end());
  const std::size_t k = angles.size();

  // Count points with angle strictly inside (s, s + pi], for s just after
  // each event angle a_i and a_i + pi; the closed-half-plane count between
  // events equals this open-arc count plus the coincident points.
  auto count_in = [&](double s) {
    // half-open arc (s, s + pi] on the circle
    double lo = s;
    double hi = s + M_PI;
    auto wrap = [](double a) {
      while (a > M_PI) a -= 2.0 * M_PI;
      while (a <= -M_PI) a += 2.0 * M_PI;
      return a;
    };
    lo = wrap(lo);
    hi = wrap(hi);
    // count angles a with lo < a <= hi (arc may wrap around +-pi); the
    // closed end gets a tolerance so exactly antipodal points survive the
    // rounding of a_i + pi
    constexpr double kTol = 1e-12;
    auto upper = [&](double v) {
      return static_cast<std::size_t>(
          std::upper_bound(angles.begin(), angles.end(), v) - angles.begin());
    };
    if (lo < hi) return upper(hi + kTol) - upper(lo);
    return k - (upper(lo) - upper(hi + kTol));
  };

  std::size_t best = k;
  for (std::size_t i = 0; i < k; ++i) {
    best = std::min(best, count_in(angles[i]));
    best = std::min(best, count_in(angles[i] + M_PI));
  }
  rep.estimate = static_cast<double>(best + at_x) / static_cast<double>(m);
  return rep;
}

double depth_exact_2d_uniform(Vec2 x, const Polygon2D& body) {
  if (!body.contains(x)) return 0.0;
  const double area = body.area();
  auto mass_above = [&](double phi) {
    const Vec2 theta{std::cos(phi), std::sin(phi)};
    const double c = x.x * theta.x + x.y * theta.y;
    return (area - halfplane_polygon_measure(body, theta, c)) / area;
  };
  // multistart golden-section; the objective is piecewise-smooth in the
  // angle with one kink per polygon vertex
  const int starts = std::max(64, 8 * static_cast<int>(body.vertices().size()));
  const double step = 2.0 * M_PI / starts;
  double best = 1.0;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 0; i < starts; ++i) {
    double a = i * step;
    double b = a + step;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = mass_above(c);
    double fd = mass_above(d);
    for (int it = 0; it < 60 && (b - a) > 1e-12; ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = mass_above(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = mass_above(d);
      }
    }
    best = std::min(best, std::min(fc, fd));
  }
  return best;
}

double kappa_depth_lower_bound(double norm_K, double kappa) {
  if (kappa <= 0.0 || kappa >= 1.0) {
    throw std::invalid_argument("kappa_depth_lower_bound: kappa must be in (0, 1)");
  }
  if (norm_K > 1.0) return 0.0;
  if (norm_K < 0.0) throw std::invalid_argument("kappa_depth_lower_bound: norm_K < 0");
  return kappa / 16.0 * std::pow(1.0 - norm_K, 1.0 / kappa);
}

}  // namespace rpvt
