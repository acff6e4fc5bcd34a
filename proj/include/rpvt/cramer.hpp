#pragma once

#include <span>

#include "rpvt/distribution.hpp"

namespace rpvt {

struct CramerResult {
  double value = 0.0;
  bool converged = true;
  /// Set when x sits (numerically) on the support boundary and the
  /// supremum was capped at a large finite value.
  bool boundary_warning = false;
};

/// Log-moment generating function of uniform[-1,1]: log(sinh t / t).
double lmgf_uniform(double t);
/// ... and its derivative coth t - 1/t.
double lmgf_uniform_deriv(double t);
/// Log-mgf of a symmetric +-1 coin: log cosh t.
double lmgf_pm1(double t);

/// 1-D Legendre transform sup_t {t x - lmgf(t)} for the uniform[-1,1] law.
CramerResult legendre_uniform(double x);
/// Same for the +-1 coin (closed form).
CramerResult legendre_pm1(double x);

/// Cramer rate Lambda*_X(x): separable evaluation for cube and product
/// kinds, radial reduction for rotation-invariant kinds. Returns +inf
/// outside the closed support hull.
CramerResult cramer_rate(const DistributionSpec& spec, std::span<const double> x);

}  // namespace rpvt
