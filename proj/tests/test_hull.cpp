#include <cmath>
#include <vector>

#include <doctest.h>

#include "rpvt/geom2d.hpp"
#include "rpvt/hull.hpp"
#include "rpvt/rng.hpp"
#include "rpvt/sampling.hpp"

using namespace rpvt;

TEST_CASE("unit simplex volume in 3-D") {
  const std::vector<double> pts{0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1};
  const auto hull = build_hull(pts, 4, 3);
  CHECK_FALSE(hull.degenerate);
  CHECK(hull.vertices.size() == 4);
  CHECK(hull.facets.size() == 4);
  CHECK(hull_volume(hull) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("cube corners give the cube volume") {
  std::vector<double> pts;
  for (int m = 0; m < 8; ++m) {
    pts.push_back(m & 1 ? 1.0 : -1.0);
    pts.push_back(m & 2 ? 1.0 : -1.0);
    pts.push_back(m & 4 ? 1.0 : -1.0);
  }
  pts.insert(pts.end(), {0.0, 0.0, 0.0, 0.5, 0.2, -0.1});  // interior points
  const auto hull = build_hull(pts, 10, 3);
  CHECK(hull.vertices.size() == 8);
  CHECK(hull_volume(hull) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("planar path: square area") {
  const std::vector<double> pts{-1, -1, 1, -1, 1, 1, -1, 1, 0, 0};
  const auto hull = build_hull(pts, 5, 2);
  CHECK(hull.vertices.size() == 4);
  CHECK(hull_volume(hull) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("dim 1 hull is the interval") {
  const std::vector<double> pts{0.3, -0.7, 0.1, 0.9};
  const auto hull = build_hull(pts, 4, 1);
  CHECK(hull_volume(hull) == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("degenerate input is flagged") {
  // four coplanar points in 3-D
  const std::vector<double> pts{0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0};
  const auto hull = build_hull(pts, 4, 3);
  CHECK(hull.degenerate);
  CHECK(hull_volume(hull) == 0.0);
}

TEST_CASE("facets contain all points and the interior point is interior") {
  for (int dim : {3, 4, 5}) {
    const auto spec = make_ball(dim);
    const auto pts = sample(spec, 60, {31, static_cast<std::uint64_t>(dim)});
    const auto hull = build_hull(pts);
    REQUIRE_FALSE(hull.degenerate);
    for (const auto& f : hull.facets) {
      CHECK(f.vertex_indices.size() == static_cast<std::size_t>(dim));
      double in = 0.0;
      for (int k = 0; k < dim; ++k) in += f.normal[k] * hull.interior[k];
      CHECK(in < f.offset);
      for (std::size_t i = 0; i < pts.count; ++i) {
        double s = 0.0;
        for (int k = 0; k < dim; ++k) s += f.normal[k] * pts.points[i * dim + k];
        CHECK(s <= f.offset + hull.tol * 10);
      }
    }
  }
}

TEST_CASE("hull volume against MC facet-membership in dim 4") {
  const auto spec = make_cube_solid(4);
  const auto pts = sample(spec, 40, {32, 0});
  const auto hull = build_hull(pts);
  REQUIRE_FALSE(hull.degenerate);
  const double vol = hull_volume(hull);

  RngStream rng({33, 0});
  const int probes = 200000;
  int hits = 0;
  for (int i = 0; i < probes; ++i) {
    double x[4];
    for (double& c : x) c = rng.next_uniform(-1.0, 1.0);
    bool inside = true;
    for (const auto& f : hull.facets) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += f.normal[k] * x[k];
      if (s > f.offset) {
        inside = false;
        break;
      }
    }
    hits += inside;
  }
  const double p = static_cast<double>(hits) / probes;
  const double se = 16.0 * std::sqrt(p * (1 - p) / probes);
  CHECK(std::abs(vol - 16.0 * p) < 4.0 * se);
}

TEST_CASE("2-D hull volume equals the shoelace oracle") {
  RngStream rng({34, 0});
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> pts;
    std::vector<Vec2> pts2;
    for (int i = 0; i < 30; ++i) {
      const double x = rng.next_uniform(-1, 1), y = rng.next_uniform(-1, 1);
      pts.insert(pts.end(), {x, y});
      pts2.push_back({x, y});
    }
    const auto hull = build_hull(pts, 30, 2);
    CHECK(hull_volume(hull) ==
          doctest::Approx(polygon_area(convex_hull_2d(pts2))).epsilon(1e-10));
  }
}
