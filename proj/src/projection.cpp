#include "rpvt/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "rpvt/sampling.hpp"

namespace rpvt {

namespace {

constexpr std::size_t kMcDraws = 1000000;

using gauss64 = boost::math::quadrature::gauss<double, 64>;

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Tail of the radial-family marginal: P(T > u) where T has density
// proportional to (1-t^2)^p on [-1,1]. Uses T^2 ~ Beta(1/2, p+1).
double radial_marginal_tail(double p, double u) {
  if (u <= -1.0) return 1.0;
  if (u >= 1.0) return 0.0;
  if (u < 0.0) return 1.0 - radial_marginal_tail(p, -u);
  const double two_sided = 1.0 - boost::math::ibeta(0.5, p + 1.0, u * u);
  return 0.5 * two_sided;
}

// P(sum_i a_i e_i > t) for signs e_i uniform on {-1,+1}, by enumeration.
double cube_vertices_tail_exact(std::span<const double> coeffs, double t) {
  const int n = static_cast<int>(coeffs.size());
  const std::uint64_t total = 1ULL << n;
  std::uint64_t hits = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += (mask >> i & 1) ? coeffs[i] : -coeffs[i];
    if (s > t) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

Estimate mc_tail(const DistributionSpec& spec, std::span<const double> theta, double a,
                 SeedSpec seed) {
  RngStream rng(seed);
  std::vector<double> x(spec.dim);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < kMcDraws; ++i) {
    sample_point(spec, rng, x.data());
    double s = 0.0;
    for (int j = 0; j < spec.dim; ++j) s += x[j] * theta[j];
    if (s > a) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(kMcDraws);
  return {p, std::sqrt(std::max(p * (1.0 - p), 1.0 / kMcDraws) / kMcDraws), false};
}

}  // namespace

double cube_halfspace_cdf(std::span<const double> coeffs, double t) {
  std::vector<double> a;
  double amax = 0.0;
  for (double c : coeffs) amax = std::max(amax, std::abs(c));
  if (amax == 0.0) return t >= 0.0 ? 1.0 : 0.0;
  for (double c : coeffs) {
    if (std::abs(c) > 1e-12 * amax) a.push_back(std::abs(c));
  }
  const int k = static_cast<int>(a.size());
  if (k == 0) return t >= 0.0 ? 1.0 : 0.0;
  if (k > 16) throw std::invalid_argument("cube_halfspace_cdf: too many coefficients");
  double total = 0.0;
  for (double c : a) total += c;
  if (t <= -total) return 0.0;
  if (t >= total) return 1.0;
  // F(t) = sum_{eps} (-1)^{|eps|} ((t + A - 2<eps,a>)_+)^k / (2^k k! prod a)
  long double sum = 0.0L;
  const std::uint64_t corners = 1ULL << k;
  for (std::uint64_t mask = 0; mask < corners; ++mask) {
    long double arg = t + total;
    int bits = 0;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        arg -= 2.0L * a[static_cast<std::size_t>(i)];
        ++bits;
      }
    }
    if (arg <= 0.0L) continue;
    long double term = 1.0L;
    for (int i = 0; i < k; ++i) term *= arg;
    sum += (bits & 1) ? -term : term;
  }
  long double denom = 1.0L;
  for (int i = 1; i <= k; ++i) denom *= 2.0L * i;
  for (double c : a) denom *= c;
  const double f = static_cast<double>(sum / denom);
  return std::min(1.0, std::max(0.0, f));
}

double support_h(const DistributionSpec& spec, std::span<const double> theta) {
  const double s = spec.isotropic_scale;
  if (spec.rotation_invariant()) return s * norm2(theta);
  double acc = 0.0;
  for (double t : theta) acc += std::abs(t);
  return s * acc;
}

Estimate directional_tail(const DistributionSpec& spec, std::span<const double> theta,
                          double a, SeedSpec seed) {
  const double s = spec.isotropic_scale;
  if (spec.rotation_invariant()) {
    const double beta = spec.kind == Kind::beta ? spec.beta_param
                        : spec.kind == Kind::ball ? 0.0
                                                  : -1.0;  // sphere
    const double p = beta + 0.5 * (spec.dim - 1);
    return {radial_marginal_tail(p, a / s), 0.0, true};
  }
  if (spec.kind == Kind::cube_solid && spec.dim <= 16) {
    std::vector<double> coeffs(theta.begin(), theta.end());
    for (double& c : coeffs) c *= s;
    return {1.0 - cube_halfspace_cdf(coeffs, a), 0.0, true};
  }
  if (spec.kind == Kind::cube_vertices && spec.dim <= 20) {
    std::vector<double> coeffs(theta.begin(), theta.end());
    for (double& c : coeffs) c *= s;
    return {cube_vertices_tail_exact(coeffs, a), 0.0, true};
  }
  if (spec.kind == Kind::product_1d) {
    // Axis directions project to the (known) base marginal.
    int nonzero = -1;
    bool axis = true;
    for (int i = 0; i < spec.dim; ++i) {
      if (std::abs(theta[i]) > 1e-14) {
        if (nonzero >= 0) {
          axis = false;
          break;
        }
        nonzero = i;
      }
    }
    if (axis && nonzero >= 0) {
      const double sign = theta[nonzero] > 0 ? 1.0 : -1.0;
      const double u = sign * a;
      const double val = gauss64::integrate(
          [&](double t) { return marginal_density_1d(spec, t); }, u, s);
      return {std::min(1.0, std::max(0.0, val)), 0.0, true};
    }
  }
  return mc_tail(spec, theta, a, seed);
}

Estimate abs_projection_moment(const DistributionSpec& spec, std::span<const double> theta,
                               double alpha, SeedSpec seed) {
  if (alpha < 1.0) throw std::invalid_argument("abs_projection_moment: alpha >= 1 required");
  const double s = spec.isotropic_scale;
  if (spec.rotation_invariant()) {
    const double beta = spec.kind == Kind::beta ? spec.beta_param
                        : spec.kind == Kind::ball ? 0.0
                                                  : -1.0;
    const double p = beta + 0.5 * (spec.dim - 1);
    // E|T|^alpha = B((alpha+1)/2, p+1) / B(1/2, p+1)
    const double logm = std::lgamma(0.5 * (alpha + 1.0)) + std::lgamma(p + 1.5) -
                        std::lgamma(0.5 * (alpha + 1.0) + p + 1.0) - std::lgamma(0.5);
    return {std::pow(s, alpha) * std::exp(logm), 0.0, true};
  }
  if (alpha == 2.0 &&
      (spec.kind == Kind::cube_solid || spec.kind == Kind::cube_vertices)) {
    // independent symmetric coordinates: E<X,theta>^2 = Var(X_1) |theta|^2
    const double var1 = spec.kind == Kind::cube_solid ? 1.0 / 3.0 : 1.0;
    double norm2 = 0.0;
    for (double t : theta) norm2 += t * t;
    return {s * s * var1 * norm2, 0.0, true};
  }
  if (spec.kind == Kind::cube_vertices && spec.dim <= 20) {
    const int n = spec.dim;
    const std::uint64_t total = 1ULL << n;
    double sum = 0.0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      double t = 0.0;
      for (int i = 0; i < n; ++i) t += (mask >> i & 1) ? theta[i] : -theta[i];
      sum += std::pow(std::abs(s * t), alpha);
    }
    return {sum / static_cast<double>(total), 0.0, true};
  }
  if (spec.kind == Kind::cube_solid && spec.dim <= 16) {
    const double h = support_h(spec, theta);
    // E|S|^alpha = int_0^h alpha t^{alpha-1} * 2 P(S > t) dt by symmetry;
    // panelled quadrature because the tail is only piecewise smooth
    auto f = [&](double t) {
      return alpha * std::pow(t, alpha - 1.0) * 2.0 *
             directional_tail(spec, theta, t).value;
    };
    const int panels = 16;
    double val = 0.0;
    for (int p = 0; p < panels; ++p) {
      val += gauss64::integrate(f, h * p / panels, h * (p + 1) / panels);
    }
    return {val, 0.0, true};
  }
  RngStream rng(seed);
  std::vector<double> x(spec.dim);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < kMcDraws; ++i) {
    sample_point(spec, rng, x.data());
    double t = 0.0;
    for (int j = 0; j < spec.dim; ++j) t += x[j] * theta[j];
    const double v = std::pow(std::abs(t), alpha);
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / kMcDraws;
  const double var = std::max(0.0, sum2 / kMcDraws - mean * mean);
  return {mean, std::sqrt(var / kMcDraws), false};
}

}  // namespace rpvt
