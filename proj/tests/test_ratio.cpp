#include <cmath>

#include <doctest.h>

#include "rpvt/ratio.hpp"

using namespace rpvt;

TEST_CASE("parallel kernel is bit-identical to the serial reference") {
  const auto cube = make_cube_solid(3);
  const auto par = volume_ratio_mc(cube, 12, 500, 0, {51, 0}, RatioMethod::exact_hull, 4);
  const auto ser = volume_ratio_mc_serial(cube, 12, 500, 0, {51, 0}, RatioMethod::exact_hull);
  CHECK(par.mean == ser.mean);
  CHECK(par.stderr == ser.stderr);

  const auto signs = make_cube_vertices(8);
  const auto par2 =
      volume_ratio_mc(signs, 30, 40, 256, {52, 0}, RatioMethod::membership_mc, 4);
  const auto ser2 =
      volume_ratio_mc_serial(signs, 30, 40, 256, {52, 0}, RatioMethod::membership_mc);
  CHECK(par2.mean == ser2.mean);
  CHECK(par2.stderr == ser2.stderr);
  CHECK(par2.indeterminate_rate == ser2.indeterminate_rate);
}

TEST_CASE("degenerate cell: N <= n gives ratio exactly zero") {
  const auto cube = make_cube_solid(3);
  for (long long N : {1LL, 2LL, 3LL}) {
    const auto est = volume_ratio_mc(cube, N, 50, 0, {53, 0}, RatioMethod::exact_hull);
    CHECK(est.mean == 0.0);
    CHECK(est.stderr == 0.0);
  }
}

TEST_CASE("random triangle in the square: E|K_3|/4 = 11/144") {
  const auto est =
      volume_ratio_mc(make_cube_solid(2), 3, 100000, 0, {54, 0}, RatioMethod::exact_hull);
  CHECK(std::abs(est.mean - 11.0 / 144.0) < 3.0 * est.stderr);
  CHECK(est.stderr < 1e-3);
}

TEST_CASE("random triangle in the disk: E|K_3|/pi = 35/(48 pi^2)") {
  const auto est =
      volume_ratio_mc(make_ball(2), 3, 100000, 0, {55, 0}, RatioMethod::exact_hull);
  CHECK(std::abs(est.mean - 35.0 / (48.0 * M_PI * M_PI)) < 3.0 * est.stderr);
}

TEST_CASE("ratio is monotone in N") {
  const auto cube = make_cube_solid(2);
  const auto small =
      volume_ratio_mc(cube, 5, 4000, 0, {56, 0}, RatioMethod::exact_hull);
  const auto large =
      volume_ratio_mc(cube, 20, 4000, 0, {57, 0}, RatioMethod::exact_hull);
  const double se = std::hypot(small.stderr, large.stderr);
  CHECK(large.mean - small.mean > 3.0 * se);
}

TEST_CASE("membership estimator matches the exact estimator") {
  const auto spec = make_cube_vertices(4);
  const auto ex = volume_ratio_mc(spec, 20, 4000, 0, {58, 0}, RatioMethod::exact_hull);
  const auto mc =
      volume_ratio_mc(spec, 20, 400, 512, {59, 0}, RatioMethod::membership_mc);
  CHECK(std::abs(ex.mean - mc.mean) < 3.0 * std::hypot(ex.stderr, mc.stderr));
}

TEST_CASE("estimates are within [0, 1]") {
  const auto est =
      volume_ratio_mc(make_ball(3), 100, 200, 0, {60, 0}, RatioMethod::exact_hull);
  CHECK(est.mean >= 0.0);
  CHECK(est.mean <= 1.0);
}
