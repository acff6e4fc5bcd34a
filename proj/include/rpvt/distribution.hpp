#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rpvt {

enum class Kind { cube_solid, cube_vertices, ball, sphere, beta, product_1d };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

/// Closed description of a sampling family. Support bodies are kept in
/// pre-isotropization coordinates; isotropic_scale composes on top, so
/// exact support-volume formulas stay exact.
struct DistributionSpec {
  Kind kind = Kind::cube_solid;
  int dim = 1;
  double beta_param = 0.0;  // beta kind only, > -1

  // product_1d: symmetric density tabulated on a uniform grid over [-1, 1];
  // normalized at construction by trapezoid rule.
  std::vector<double> product_table;

  double isotropic_scale = 1.0;

  /// Concavity parameter when known: 1/n for solid cube and ball,
  /// 1/(beta+n) for the beta family. Empty for sphere / cube vertices.
  std::optional<double> kappa() const;

  /// |conv(support)| in current (scaled) coordinates.
  std::optional<double> support_volume() const;

  /// Radius scale of the support in current coordinates: cube kinds are
  /// supported in [-s, s]^n, ball-like kinds in s*B_2^n.
  double support_radius() const { return isotropic_scale; }

  bool rotation_invariant() const {
    return kind == Kind::ball || kind == Kind::sphere || kind == Kind::beta;
  }

  void validate() const;  // throws std::invalid_argument
};

DistributionSpec make_cube_solid(int n);
DistributionSpec make_cube_vertices(int n);
DistributionSpec make_ball(int n);
DistributionSpec make_sphere(int n);
DistributionSpec make_beta(int n, double beta);
DistributionSpec make_product_1d(int n, std::vector<double> density_table);

/// Returns the spec with isotropic_scale set so the scaled law has
/// identity covariance.
DistributionSpec isotropize(const DistributionSpec& spec);

/// E X_1^2 of the *unscaled* law.
double coordinate_second_moment(const DistributionSpec& spec);

/// Density of <X, e_1> at t, in current (scaled) coordinates.
/// Zero outside the support projection. Not defined for cube_vertices
/// or sphere-in-the-plane.
double marginal_density_1d(const DistributionSpec& spec, double t);

/// Minkowski gauge of the (scaled) support body.
double support_norm(const DistributionSpec& spec, std::span<const double> x);

/// Isotropic constant L = (ess sup density)^{1/n} for the solid kinds,
/// in current coordinates.
double isotropic_constant(const DistributionSpec& spec);

/// Flat key=value serialization (one pair per line).
std::string spec_to_kv(const DistributionSpec& spec);
DistributionSpec spec_from_kv(const std::string& text);

}  // namespace rpvt
