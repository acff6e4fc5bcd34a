#include <stdexcept>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "rpvt/centroid_body.hpp"
#include "rpvt/floating_body.hpp"
#include "rpvt/projection.hpp"

using namespace rpvt;

namespace {

std::vector<double> axis_plus_random(int n, int extra, SeedSpec seed) {
  std::vector<double> dirs(static_cast<std::size_t>(2 * n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    dirs[static_cast<std::size_t>(2 * k) * n + k] = 1.0;
    dirs[static_cast<std::size_t>(2 * k + 1) * n + k] = -1.0;
  }
  const auto rnd = random_directions(n, extra, seed);
  dirs.insert(dirs.end(), rnd.begin(), rnd.end());
  return dirs;
}

}  // namespace

TEST_CASE("floating body of the square: exact axis offsets") {
  const auto spec = make_cube_solid(2);
  const auto dirs = axis_plus_random(2, 0, {71, 0});
  // P(X1 <= t) = (t+1)/2 = 1 - delta  =>  t = 1 - 2 delta
  for (double delta : {0.05, 0.25, 0.5}) {
    const auto body = floating_body(spec, delta, dirs, 2000, {72, 0});
    for (double off : body.offsets) {
      CHECK(off == doctest::Approx(1.0 - 2.0 * delta).epsilon(1e-7));
    }
  }
}

TEST_CASE("floating body volume limits") {
  const auto spec = make_cube_solid(2);
  const auto dirs = axis_plus_random(2, 32, {73, 0});
  // delta = 1/2 pinches a symmetric law to a point
  const auto pinched = floating_body(spec, 0.5, dirs, 50000, {74, 0});
  CHECK(pinched.volume_estimate == doctest::Approx(0.0).epsilon(1e-6));
  // delta -> 0 recovers the support
  const auto full = floating_body(spec, 1e-4, dirs, 50000, {75, 0});
  CHECK(full.volume_estimate == doctest::Approx(4.0).epsilon(0.02));
  CHECK_FALSE(full.empty_interior_warning);
  const auto deep = floating_body(spec, 0.6, dirs, 1000, {76, 0});
  CHECK(deep.empty_interior_warning);
}

TEST_CASE("more directions shrink the outer approximation") {
  const auto spec = make_ball(2);
  const auto coarse = floating_body(spec, 0.1, axis_plus_random(2, 12, {77, 0}), 200000,
                                    {78, 0});
  const auto fine = floating_body(spec, 0.1, axis_plus_random(2, 256, {79, 0}), 200000,
                                  {80, 0});
  const double se = std::hypot(coarse.volume_stderr, fine.volume_stderr);
  CHECK(fine.volume_estimate <= coarse.volume_estimate + 3.0 * se);
  // rotation invariance: every offset solves tail(t) = delta
  const auto oracle = directional_tail(spec, std::vector<double>{1.0, 0.0}, 0.0);
  CHECK(oracle.exact);
  for (double off : fine.offsets) {
    const auto t = directional_tail(spec, std::vector<double>{1.0, 0.0}, off);
    CHECK(t.value == doctest::Approx(0.1).epsilon(1e-6));
  }
}

TEST_CASE("floating body input validation") {
  const auto spec = make_cube_solid(2);
  const auto dirs = axis_plus_random(2, 0, {81, 0});
  CHECK_THROWS_AS(floating_body(spec, 0.0, dirs, 100, {82, 0}), std::invalid_argument);
  CHECK_THROWS_AS(floating_body(spec, 1.5, dirs, 100, {82, 0}), std::invalid_argument);
  const std::vector<double> too_few{1.0, 0.0, -1.0, 0.0};
  CHECK_THROWS_AS(floating_body(spec, 0.1, too_few, 100, {82, 0}), std::invalid_argument);
}

TEST_CASE("wet part complements the floating body") {
  const auto spec = make_cube_solid(2);
  const auto dirs = axis_plus_random(2, 32, {83, 0});
  const auto body = floating_body(spec, 0.1, dirs, 100000, {84, 0});
  const auto wet = wet_part_volume(spec, 0.1, dirs, 100000, {84, 0});
  CHECK(wet.volume == doctest::Approx(4.0 - body.volume_estimate).epsilon(1e-12));
}

TEST_CASE("centroid body support: exact special values") {
  // solid cube, axis: (E U^2)^{1/2} = 1/sqrt(3); (E|U|)^1 = 1/2
  CHECK(centroid_support(make_cube_solid(3), 2.0, std::vector<double>{1, 0, 0}) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
  CHECK(centroid_support(make_cube_solid(3), 1.0, std::vector<double>{1, 0, 0}) ==
        doctest::Approx(0.5).epsilon(1e-9));
  // sign vectors: h = 1 for alpha = 2 in every direction
  CHECK(centroid_support(make_cube_vertices(3), 2.0,
                         std::vector<double>{0.6, 0.0, -0.8}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // ball n=3: (E X1^2)^{1/2} = 1/sqrt(5)
  CHECK(centroid_support(make_ball(3), 2.0, std::vector<double>{0, 0, 1}) ==
        doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-9));
  CHECK_THROWS_AS(
      centroid_support(make_ball(3), 0.5, std::vector<double>{0, 0, 1}, SeedSpec{}),
      std::invalid_argument);
}

TEST_CASE("isotropic Z_2 is the unit ball") {
  for (const auto& base : {make_cube_solid(3), make_ball(3), make_beta(3, 2.0)}) {
    const auto spec = isotropize(base);
    const auto dirs = random_directions(3, 32, {85, 0});
    for (int j = 0; j < 32; ++j) {
      const std::span<const double> theta{dirs.data() + 3 * j, 3};
      CHECK(centroid_support(spec, 2.0, theta) == doctest::Approx(1.0).epsilon(1e-7));
    }
  }
}

TEST_CASE("centroid bodies are nested in alpha") {
  const auto spec = make_cube_solid(3);
  const auto dirs = random_directions(3, 16, {86, 0});
  for (int j = 0; j < 16; ++j) {
    const std::span<const double> theta{dirs.data() + 3 * j, 3};
    double prev = 0.0;
    for (double alpha : {1.0, 2.0, 3.0, 4.0, 6.0}) {
      const double h = centroid_support(spec, alpha, theta, {87, 0});
      CHECK(h >= prev - 1e-9);  // power means grow with the exponent
      prev = h;
    }
  }
}

TEST_CASE("outer volume over-estimates and shrinks with directions") {
  const auto spec = make_cube_solid(3);
  // alpha=2 centroid body of the cube: ellipsoid-like, exactly the ball
  // of radius 1/sqrt(3) here (covariance is isotropic)
  const double exact = 4.0 * M_PI / 3.0 * std::pow(1.0 / std::sqrt(3.0), 3);
  const auto coarse = centroid_outer_volume(spec, 2.0, 16, 200000, {88, 0});
  const auto fine = centroid_outer_volume(spec, 2.0, 128, 200000, {89, 0});
  CHECK(coarse.outer_volume > exact - 3.0 * coarse.outer_volume_stderr);
  CHECK(fine.outer_volume > exact - 3.0 * fine.outer_volume_stderr);
  CHECK(fine.outer_volume <=
        coarse.outer_volume + 3.0 * std::hypot(coarse.outer_volume_stderr,
                                               fine.outer_volume_stderr));
  CHECK_FALSE(coarse.out_of_paouris_regime);
  CHECK(centroid_outer_volume(spec, 1.5, 8, 1000, {90, 0}).out_of_paouris_regime);
}

TEST_CASE("sublevel-set inclusion checks report no violations") {
  const auto rep = inclusion_check_LqZ(make_cube_solid(2), 2.0, 300, 32, {91, 0});
  CHECK(rep.violations == 0);
  CHECK(rep.reverse_violations == 0);
  CHECK(rep.max_ratio > 0.0);
  CHECK(rep.max_ratio <= 1.0);
  CHECK_THROWS_AS(inclusion_check_LqZ(make_cube_solid(2), 1.0, 10, 8, {92, 0}),
                  std::invalid_argument);
}

TEST_CASE("paouris ratio is finite and modest in small dimension") {
  for (int n : {2, 3}) {
    for (const auto& base : {make_cube_solid(n), make_ball(n)}) {
      const auto spec = isotropize(base);
      const double ratio = paouris_ratio(spec, 2.0, 64, 100000, {93, 0});
      CHECK(std::isfinite(ratio));
      CHECK(ratio > 0.0);
      CHECK(ratio <= 10.0);
    }
  }
}
