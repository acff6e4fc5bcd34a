#include "rpvt/membership.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rpvt {

namespace {

double dot(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int i = 0; i < d; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

double default_membership_tol(const SampleSet& points) {
  const int d = points.dim;
  double diag2 = 0.0;
  for (int c = 0; c < d; ++c) {
    double lo = points.points[c], hi = points.points[c];
    for (std::size_t i = 1; i < points.count; ++i) {
      const double v = points.points[i * d + c];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    diag2 += (hi - lo) * (hi - lo);
  }
  return 1e-9 * std::sqrt(diag2);
}

MembershipResult membership(std::span<const double> y, const SampleSet& points, double tol,
                            int max_iterations, MembershipScratch* scratch) {
  if (tol <= 0.0) throw std::invalid_argument("membership: tol must be positive");
  const int d = points.dim;
  const std::size_t n = points.count;
  const double* pts = points.points.data();

  MembershipResult res;
  std::vector<int> support;
  std::vector<double> coeffs;
  std::vector<double> z(d, 0.0);

  auto rebuild_z = [&]() {
    std::fill(z.begin(), z.end(), 0.0);
    for (std::size_t k = 0; k < support.size(); ++k) {
      const double* x = pts + static_cast<std::size_t>(support[k]) * d;
      for (int i = 0; i < d; ++i) z[i] += coeffs[k] * (x[i] - y[i]);
    }
  };

  if (scratch && !scratch->support.empty()) {
    support = scratch->support;
    coeffs = scratch->coeffs;
  } else {
    support = {0};
    coeffs = {1.0};
  }
  rebuild_z();

  for (int it = 1; it <= max_iterations; ++it) {
    res.iterations = it;
    const double zn2 = dot(z.data(), z.data(), d);
    const double zn = std::sqrt(zn2);
    if (zn <= tol) {
      res.status = MembershipStatus::inside;
      res.distance_bound = zn;
      res.witness_support = support;
      res.witness_coeffs = coeffs;
      break;
    }

    // Frank-Wolfe vertex: most negative <v_i, z>
    int s_idx = 0;
    double g_min = 0.0;
    {
      bool first = true;
      for (std::size_t i = 0; i < n; ++i) {
        const double* x = pts + i * d;
        double g = 0.0;
        for (int k = 0; k < d; ++k) g += (x[k] - y[k]) * z[k];
        if (first || g < g_min) {
          g_min = g;
          s_idx = static_cast<int>(i);
          first = false;
        }
      }
    }
    if (g_min > 0.0) {
      // every shifted point has positive inner product with z, so -z
      // separates the origin from the polytope
      res.status = MembershipStatus::outside;
      res.distance_bound = g_min / zn;
      res.separator.assign(d, 0.0);
      for (int k = 0; k < d; ++k) res.separator[k] = -z[k] / zn;
      break;
    }

    // away vertex among the current support
    std::size_t a_pos = 0;
    double g_max = -1e300;
    for (std::size_t k = 0; k < support.size(); ++k) {
      const double* x = pts + static_cast<std::size_t>(support[k]) * d;
      double g = 0.0;
      for (int i = 0; i < d; ++i) g += (x[i] - y[i]) * z[i];
      if (g > g_max) {
        g_max = g;
        a_pos = k;
      }
    }

    const double* xs = pts + static_cast<std::size_t>(s_idx) * d;
    const double* xa = pts + static_cast<std::size_t>(support[a_pos]) * d;
    double dd = 0.0, zd = 0.0;
    for (int k = 0; k < d; ++k) {
      const double dk = xs[k] - xa[k];
      dd += dk * dk;
      zd += z[k] * dk;
    }
    double gamma = dd > 0.0 ? -zd / dd : 0.0;
    bool progress = false;
    if (gamma > 0.0) {
      gamma = std::min(gamma, coeffs[a_pos]);
      // pairwise step: mass moves from the away vertex to the FW vertex
      auto pos = std::find(support.begin(), support.end(), s_idx);
      if (pos == support.end()) {
        support.push_back(s_idx);
        coeffs.push_back(0.0);
        pos = support.end() - 1;
      }
      coeffs[static_cast<std::size_t>(pos - support.begin())] += gamma;
      coeffs[a_pos] -= gamma;
      for (int k = 0; k < d; ++k) z[k] += gamma * (xs[k] - xa[k]);
      if (coeffs[a_pos] <= 1e-18) {
        support.erase(support.begin() + static_cast<std::ptrdiff_t>(a_pos));
        coeffs.erase(coeffs.begin() + static_cast<std::ptrdiff_t>(a_pos));
      }
      progress = gamma > 0.0;
    }
    if (!progress) {
      // classic FW step toward the vertex
      double dd2 = 0.0, zd2 = 0.0;
      for (int k = 0; k < d; ++k) {
        const double dk = (xs[k] - y[k]) - z[k];
        dd2 += dk * dk;
        zd2 += z[k] * dk;
      }
      double g2 = dd2 > 0.0 ? std::clamp(-zd2 / dd2, 0.0, 1.0) : 0.0;
      if (g2 <= 0.0) {
        // no descent direction left: z is (numerically) the min-norm point
        res.status = MembershipStatus::indeterminate;
        res.distance_bound = zn;
        break;
      }
      for (double& c : coeffs) c *= 1.0 - g2;
      auto pos = std::find(support.begin(), support.end(), s_idx);
      if (pos == support.end()) {
        support.push_back(s_idx);
        coeffs.push_back(0.0);
        pos = support.end() - 1;
      }
      coeffs[static_cast<std::size_t>(pos - support.begin())] += g2;
      for (int k = 0; k < d; ++k) z[k] = (1.0 - g2) * z[k] + g2 * (xs[k] - y[k]);
    }

    if ((it & 255) == 0) rebuild_z();
  }

  if (scratch) {
    scratch->support = support;
    scratch->coeffs = coeffs;
  }
  return res;
}

}  // namespace rpvt
