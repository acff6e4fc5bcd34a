#include <stdexcept>
#include <cmath>

#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>

#include "rpvt/distribution.hpp"
#include "rpvt/sampling.hpp"

using namespace rpvt;

TEST_CASE("kappa and support volume") {
  CHECK(*make_cube_solid(4).kappa() == doctest::Approx(0.25));
  CHECK(*make_ball(5).kappa() == doctest::Approx(0.2));
  CHECK(*make_beta(3, 2.0).kappa() == doctest::Approx(1.0 / 5.0));
  CHECK_FALSE(make_cube_vertices(3).kappa().has_value());
  CHECK_FALSE(make_sphere(3).kappa().has_value());

  CHECK(*make_cube_solid(3).support_volume() == doctest::Approx(8.0));
  CHECK(*make_cube_vertices(3).support_volume() == doctest::Approx(8.0));
  CHECK(*make_ball(2).support_volume() == doctest::Approx(M_PI));
  CHECK(*make_ball(3).support_volume() == doctest::Approx(4.0 * M_PI / 3.0));
  auto scaled = make_ball(2);
  scaled.isotropic_scale = 2.0;
  CHECK(*scaled.support_volume() == doctest::Approx(4.0 * M_PI));
}

TEST_CASE("coordinate second moments") {
  CHECK(coordinate_second_moment(make_cube_solid(4)) == doctest::Approx(1.0 / 3.0));
  CHECK(coordinate_second_moment(make_cube_vertices(4)) == doctest::Approx(1.0));
  CHECK(coordinate_second_moment(make_ball(3)) == doctest::Approx(1.0 / 5.0));
  CHECK(coordinate_second_moment(make_beta(3, 2.0)) == doctest::Approx(1.0 / 9.0));
  CHECK(coordinate_second_moment(make_sphere(4)) == doctest::Approx(1.0 / 4.0));
}

TEST_CASE("sampled moments match the law") {
  for (const auto& spec : {make_cube_solid(3), make_ball(3), make_beta(3, 2.0),
                           make_sphere(3), make_cube_vertices(3)}) {
    const auto pts = sample(spec, 200000, {11, 0});
    double m2 = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < pts.count; ++i) {
      mean += pts.points[3 * i];
      m2 += pts.points[3 * i] * pts.points[3 * i];
    }
    mean /= pts.count;
    m2 /= pts.count;
    CHECK(std::abs(mean) < 0.01);
    CHECK(m2 == doctest::Approx(coordinate_second_moment(spec)).epsilon(0.02));
  }
}

TEST_CASE("beta radial law: r^2 ~ Beta(n/2, beta+1)") {
  const int n = 3;
  const double b = 2.0;
  const auto pts = sample(make_beta(n, b), 100000, {12, 0});
  for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < pts.count; ++i) {
      double r2 = 0.0;
      for (int k = 0; k < n; ++k) r2 += pts.points[n * i + k] * pts.points[n * i + k];
      cnt += r2 <= t;
    }
    const double expected = boost::math::ibeta(0.5 * n, b + 1.0, t);
    CHECK(std::abs(static_cast<double>(cnt) / pts.count - expected) < 0.02);
  }
}

TEST_CASE("sphere samples lie on the sphere; vertices are signs") {
  const auto sph = sample(make_sphere(4), 1000, {13, 0});
  for (std::size_t i = 0; i < sph.count; ++i) {
    double r2 = 0.0;
    for (int k = 0; k < 4; ++k) r2 += sph.points[4 * i + k] * sph.points[4 * i + k];
    CHECK(r2 == doctest::Approx(1.0).epsilon(1e-12));
  }
  const auto cv = sample(make_cube_vertices(4), 1000, {14, 0});
  for (double c : cv.points) CHECK(std::abs(c) == doctest::Approx(1.0));
}

TEST_CASE("isotropize gives identity covariance") {
  for (const auto& base : {make_cube_solid(2), make_ball(3), make_beta(3, 1.5)}) {
    const auto spec = isotropize(base);
    const int n = spec.dim;
    const auto pts = sample(spec, 200000, {15, 0});
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < pts.count; ++i) {
          s += pts.points[n * i + a] * pts.points[n * i + b];
        }
        s /= pts.count;
        CHECK(std::abs(s - (a == b ? 1.0 : 0.0)) < 0.03);
      }
    }
  }
}

TEST_CASE("first marginal density at 0 within the log-concavity window") {
  // isotropic log-concave marginals satisfy g(0) in [1/(2 sqrt(3) e), sqrt(2)]
  const double lo = 1.0 / (2.0 * std::sqrt(3.0) * M_E);
  const double hi = std::sqrt(2.0);
  for (const auto& base :
       {make_cube_solid(2), make_cube_solid(4), make_ball(2), make_ball(4),
        make_beta(3, 1.0), make_beta(3, 2.0), make_beta(5, 0.5)}) {
    const auto spec = isotropize(base);
    const double g0 = marginal_density_1d(spec, 0.0);
    CHECK(g0 >= lo);
    CHECK(g0 <= hi);
  }
}

TEST_CASE("marginal density integrates to one and matches a histogram") {
  const auto spec = make_beta(3, 2.0);
  // trapezoid over the support
  const int grid = 4001;
  double integral = 0.0;
  const double s = spec.support_radius();
  for (int i = 0; i < grid; ++i) {
    const double t = -s + 2.0 * s * i / (grid - 1);
    const double w = (i == 0 || i == grid - 1) ? 0.5 : 1.0;
    integral += w * marginal_density_1d(spec, t);
  }
  integral *= 2.0 * s / (grid - 1);
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));

  const auto pts = sample(spec, 200000, {16, 0});
  std::size_t in_band = 0;
  for (std::size_t i = 0; i < pts.count; ++i) in_band += std::abs(pts.points[3 * i]) <= 0.25;
  double band_mass = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double t = -0.25 + 0.5 * i / 200.0;
    band_mass += ((i == 0 || i == 200) ? 0.5 : 1.0) * marginal_density_1d(spec, t);
  }
  band_mass *= 0.5 / 200.0;
  CHECK(static_cast<double>(in_band) / pts.count ==
        doctest::Approx(band_mass).epsilon(0.02));
}

TEST_CASE("marginal kappa/(1-kappa) concavity on a grid") {
  // for a kappa-concave law the first marginal g satisfies:
  // g^{kappa/(1-kappa)} is concave on its support
  const auto spec = make_beta(3, 2.0);
  const double kappa = *spec.kappa();
  const double p = kappa / (1.0 - kappa);
  const int grid = 201;
  std::vector<double> h(grid);
  for (int i = 0; i < grid; ++i) {
    const double t = -0.99 + 1.98 * i / (grid - 1);
    h[i] = std::pow(marginal_density_1d(spec, t), p);
  }
  for (int i = 1; i + 1 < grid; ++i) {
    CHECK(h[i] >= 0.5 * (h[i - 1] + h[i + 1]) - 1e-9);
  }
}

TEST_CASE("support norm and gauge") {
  const auto cube = make_cube_solid(3);
  CHECK(support_norm(cube, std::vector<double>{0.5, -0.25, 0.1}) == doctest::Approx(0.5));
  const auto ball = make_ball(2);
  CHECK(support_norm(ball, std::vector<double>{0.3, 0.4}) == doctest::Approx(0.5));
  auto scaled = make_ball(2);
  scaled.isotropic_scale = 2.0;
  CHECK(support_norm(scaled, std::vector<double>{0.3, 0.4}) == doctest::Approx(0.25));
}

TEST_CASE("spec round trip and validation") {
  auto spec = make_beta(4, 1.5);
  spec.isotropic_scale = 2.25;
  const auto back = spec_from_kv(spec_to_kv(spec));
  CHECK(back.kind == spec.kind);
  CHECK(back.dim == spec.dim);
  CHECK(back.beta_param == spec.beta_param);
  CHECK(back.isotropic_scale == spec.isotropic_scale);

  CHECK_THROWS_AS(make_ball(0), std::invalid_argument);
  CHECK_THROWS_AS(make_beta(3, -1.5), std::invalid_argument);
}
