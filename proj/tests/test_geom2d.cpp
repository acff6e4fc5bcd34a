#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "rpvt/geom2d.hpp"
#include "rpvt/rng.hpp"

using namespace rpvt;

TEST_CASE("polygon areas") {
  CHECK(Polygon2D::square(1.0).area() == doctest::Approx(4.0));
  CHECK(Polygon2D::square(0.5).area() == doctest::Approx(1.0));
  // regular k-gon: (k/2) r^2 sin(2 pi / k)
  for (int k : {3, 6, 17}) {
    CHECK(Polygon2D::regular(k, 2.0).area() ==
          doctest::Approx(0.5 * k * 4.0 * std::sin(2.0 * M_PI / k)));
  }
}

TEST_CASE("convex hull drops interior and collinear points") {
  std::vector<Vec2> pts{{-1, -1}, {1, -1}, {1, 1},    {-1, 1},
                        {0, 0},   {0.5, 0.2}, {0, -1},  // collinear edge midpoint
                        {1, -1}};                       // duplicate
  const auto hull = convex_hull_2d(pts);
  CHECK(hull.size() == 4);
  CHECK(polygon_area(hull) == doctest::Approx(4.0));
}

TEST_CASE("hull of random points contains all inputs") {
  RngStream rng({3, 0});
  std::vector<Vec2> pts;
  for (int i = 0; i < 200; ++i) pts.push_back({rng.next_uniform(-1, 1), rng.next_uniform(-1, 1)});
  const Polygon2D poly(convex_hull_2d(pts));
  for (const Vec2& p : pts) CHECK(poly.contains(p, 1e-9));
}

TEST_CASE("halfplane measures of the square") {
  const auto sq = Polygon2D::square(1.0);
  CHECK(halfplane_polygon_measure(sq, {1, 0}, 0.0) == doctest::Approx(2.0));
  CHECK(halfplane_polygon_measure(sq, {1, 0}, 1.0) == doctest::Approx(4.0));
  CHECK(halfplane_polygon_measure(sq, {1, 0}, -1.0) == doctest::Approx(0.0));
  CHECK(halfplane_polygon_measure(sq, {0, -1}, 0.5) == doctest::Approx(3.0));
  // corner cut x + y <= -1: triangle (-1,0),(0,-1),(-1,-1), area 1/2
  const double inv = 1.0 / std::sqrt(2.0);
  CHECK(halfplane_polygon_measure(sq, {inv, inv}, -inv) == doctest::Approx(0.5));
  // direction need not be unit: same half-plane, scaled description
  CHECK(halfplane_polygon_measure(sq, {2, 2}, -2.0) == doctest::Approx(0.5));
}

TEST_CASE("halfplane measure complements add up") {
  const auto hex = Polygon2D::regular(6, 1.0);
  RngStream rng({4, 0});
  for (int i = 0; i < 50; ++i) {
    Vec2 d{rng.next_normal(), rng.next_normal()};
    const double c = rng.next_uniform(-1.5, 1.5);
    const double below = halfplane_polygon_measure(hex, d, c);
    const double above = halfplane_polygon_measure(hex, {-d.x, -d.y}, -c);
    CHECK(below + above == doctest::Approx(hex.area()).epsilon(1e-9));
  }
}

TEST_CASE("degenerate inputs are rejected") {
  const std::vector<Vec2> two{{0, 0}, {1, 0}};
  const std::vector<Vec2> collinear{{0, 0}, {1, 0}, {2, 0}};
  // clockwise ordering is not a valid CCW polygon
  const std::vector<Vec2> clockwise{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  CHECK_THROWS_AS(Polygon2D{two}, std::invalid_argument);
  CHECK_THROWS_AS(Polygon2D{collinear}, std::invalid_argument);
  CHECK_THROWS_AS(Polygon2D{clockwise}, std::invalid_argument);
  const auto sq = Polygon2D::square(1.0);
  const Vec2 zero{0, 0};
  CHECK_THROWS_AS(halfplane_polygon_measure(sq, zero, 0.0), std::invalid_argument);
}

TEST_CASE("contains") {
  const auto sq = Polygon2D::square(1.0);
  CHECK(sq.contains({0, 0}));
  CHECK(sq.contains({1, 1}));       // vertex
  CHECK(sq.contains({1, 0}));       // edge
  CHECK_FALSE(sq.contains({1.001, 0}));
  CHECK_FALSE(sq.contains({-2, 0.5}));
}
