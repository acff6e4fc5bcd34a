#include "rpvt/cramer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace rpvt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kThetaCap = 1e6;

using gauss64 = boost::math::quadrature::gauss<double, 64>;

// Generic 1-D Legendre transform for an even, strictly convex lmgf given
// by value/derivative callables; deriv is increasing with range (-r, r).
template <class F, class DF>
CramerResult legendre_1d(F lmgf, DF deriv, double x, double slope_at_1) {
  CramerResult res;
  if (x == 0.0) return res;
  const double ax = std::abs(x);
  // bracket: deriv(lo) < ax <= deriv(hi)
  double lo = 0.0;
  double hi = std::max(1.0, ax / slope_at_1);
  while (deriv(hi) < ax) {
    hi *= 2.0;
    if (hi > kThetaCap) {
      res.value = ax * hi - lmgf(hi);
      res.boundary_warning = true;
      return res;
    }
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (deriv(mid) < ax) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13 * (1.0 + hi)) break;
  }
  const double t = 0.5 * (lo + hi);
  res.value = ax * t - lmgf(t);
  return res;
}

}  // namespace

double lmgf_uniform(double t) {
  const double a = std::abs(t);
  if (a < 1e-4) {
    const double t2 = t * t;
    return t2 / 6.0 - t2 * t2 / 180.0;
  }
  // log(sinh a / a) = a + log1p(-exp(-2a)) - log 2 - log a
  return a + std::log1p(-std::exp(-2.0 * a)) - M_LN2 - std::log(a);
}

double lmgf_uniform_deriv(double t) {
  const double a = std::abs(t);
  double d;
  if (a < 1e-4) {
    d = a / 3.0 - a * a * a / 45.0;
  } else {
    d = 1.0 / std::tanh(a) - 1.0 / a;
  }
  return t < 0 ? -d : d;
}

double lmgf_pm1(double t) {
  const double a = std::abs(t);
  // log cosh a = a + log1p(exp(-2a)) - log 2
  return a + std::log1p(std::exp(-2.0 * a)) - M_LN2;
}

CramerResult legendre_uniform(double x) {
  if (std::abs(x) > 1.0) return {kInf, true, false};
  if (std::abs(x) == 1.0) {
    // the sup diverges logarithmically at the endpoint
    return {std::abs(x) * kThetaCap - lmgf_uniform(kThetaCap), true, true};
  }
  return legendre_1d([](double t) { return lmgf_uniform(t); },
                     [](double t) { return lmgf_uniform_deriv(t); }, x,
                     lmgf_uniform_deriv(1.0));
}

CramerResult legendre_pm1(double x) {
  if (std::abs(x) > 1.0) return {kInf, true, false};
  const double p = 0.5 * (1.0 + x);
  const double q = 0.5 * (1.0 - x);
  const double plogp = p > 0 ? p * std::log(p) : 0.0;
  const double qlogq = q > 0 ? q * std::log(q) : 0.0;
  return {M_LN2 + plogp + qlogq, true, false};
}

CramerResult cramer_rate(const DistributionSpec& spec, std::span<const double> x) {
  spec.validate();
  const double s = spec.isotropic_scale;
  const int n = spec.dim;

  switch (spec.kind) {
    case Kind::cube_solid:
    case Kind::cube_vertices: {
      CramerResult total;
      for (int i = 0; i < n; ++i) {
        const CramerResult c = spec.kind == Kind::cube_solid ? legendre_uniform(x[i] / s)
                                                             : legendre_pm1(x[i] / s);
        total.value += c.value;
        total.converged = total.converged && c.converged;
        total.boundary_warning = total.boundary_warning || c.boundary_warning;
        if (std::isinf(total.value)) return total;
      }
      return total;
    }
    case Kind::product_1d: {
      // separable; 1-D lmgf by quadrature against the tabulated density
      auto lmgf = [&](double t) {
        const double v = gauss64::integrate(
            [&](double u) { return marginal_density_1d(spec, u) * std::exp(-t * (s - u)); },
            -s, s);
        return t * s + std::log(v);
      };
      auto deriv = [&](double t) {
        const double z = gauss64::integrate(
            [&](double u) { return marginal_density_1d(spec, u) * std::exp(-t * (s - u)); },
            -s, s);
        const double m = gauss64::integrate(
            [&](double u) {
              return u * marginal_density_1d(spec, u) * std::exp(-t * (s - u));
            },
            -s, s);
        return m / z;
      };
      CramerResult total;
      for (int i = 0; i < n; ++i) {
        if (std::abs(x[i]) > s) return {kInf, true, false};
        const CramerResult c = legendre_1d(lmgf, deriv, x[i], deriv(1.0));
        total.value += c.value;
        total.converged = total.converged && c.converged;
        total.boundary_warning = total.boundary_warning || c.boundary_warning;
      }
      return total;
    }
    case Kind::ball:
    case Kind::sphere:
    case Kind::beta: {
      double r2 = 0.0;
      for (double v : x) r2 += v * v;
      const double r = std::sqrt(r2);
      if (r > s) return {kInf, true, false};
      // radial reduction: Lambda(theta) depends on |theta| only
      const double beta = spec.kind == Kind::beta ? spec.beta_param
                          : spec.kind == Kind::ball ? 0.0
                                                    : -1.0;
      const double p = beta + 0.5 * (n - 1);
      auto weight = [p](double u) { return std::pow(std::max(0.0, 1.0 - u * u), p); };
      const double z0 = gauss64::integrate(weight, -1.0, 1.0);
      // E e^{t<X,e1>} rescaled by e^{-ts} so the integrand stays in [0,1]
      // for t >= 0 (the only branch the Legendre sup needs).
      auto lmgf = [&](double t) {
        const double v = gauss64::integrate(
            [&](double u) { return weight(u) * std::exp(-t * s * (1.0 - u)); }, -1.0, 1.0);
        return t * s + std::log(v / z0);
      };
      auto deriv = [&](double t) {
        const double z = gauss64::integrate(
            [&](double u) { return weight(u) * std::exp(-t * s * (1.0 - u)); }, -1.0, 1.0);
        const double m = gauss64::integrate(
            [&](double u) { return weight(u) * s * u * std::exp(-t * s * (1.0 - u)); }, -1.0,
            1.0);
        return m / z;
      };
      return legendre_1d(lmgf, deriv, r, deriv(1.0));
    }
  }
  throw std::logic_error("cramer_rate: bad kind");
}

}  // namespace rpvt
