#include "rpvt/geom2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rpvt {

double polygon_area(const std::vector<Vec2>& v) {
  const std::size_t m = v.size();
  if (m < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % m];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

std::vector<Vec2> convex_hull_2d(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const std::size_t m = pts.size();
  if (m < 3) return pts;
  std::vector<Vec2> hull(2 * m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = m - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Polygon2D::Polygon2D(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t m = vertices_.size();
  if (m < 3) throw std::invalid_argument("Polygon2D: need at least 3 vertices");
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % m];
    if (a.x == b.x && a.y == b.y) {
      throw std::invalid_argument("Polygon2D: duplicate consecutive vertices");
    }
    const Vec2& c = vertices_[(i + 2) % m];
    if (cross(a, b, c) < 0) {
      throw std::invalid_argument("Polygon2D: vertices not convex counter-clockwise");
    }
  }
  area_ = polygon_area(vertices_);
  if (area_ <= 0.0) {
    throw std::invalid_argument("Polygon2D: vertices are collinear (zero area)");
  }
}

Polygon2D Polygon2D::square(double h) {
  return Polygon2D({{-h, -h}, {h, -h}, {h, h}, {-h, h}});
}

Polygon2D Polygon2D::regular(int sides, double radius) {
  if (sides < 3) throw std::invalid_argument("Polygon2D::regular: need >= 3 sides");
  std::vector<Vec2> v(sides);
  for (int i = 0; i < sides; ++i) {
    const double a = 2.0 * M_PI * i / sides;
    v[i] = {radius * std::cos(a), radius * std::sin(a)};
  }
  return Polygon2D(std::move(v));
}

bool Polygon2D::contains(Vec2 p, double tol) const {
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % m];
    // edge length scales the signed-area test into a distance test
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (cross(a, b, p) < -tol * len) return false;
  }
  return true;
}

double halfplane_polygon_measure(const Polygon2D& poly, Vec2 dir, double offset) {
  const double dn = std::hypot(dir.x, dir.y);
  if (dn == 0.0) throw std::invalid_argument("halfplane_polygon_measure: zero direction");
  if (poly.area() == 0.0) {
    throw std::invalid_argument("halfplane_polygon_measure: degenerate polygon");
  }
  // half-plane {<x, dir> <= offset}: normalizing the description keeps the
  // clip arithmetic well scaled
  dir.x /= dn;
  dir.y /= dn;
  offset /= dn;
  // Sutherland-Hodgman clip against <x, dir> <= offset
  const std::vector<Vec2>& v = poly.vertices();
  std::vector<Vec2> out;
  out.reserve(v.size() + 1);
  const std::size_t m = v.size();
  auto f = [&](Vec2 p) { return p.x * dir.x + p.y * dir.y - offset; };
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 a = v[i];
    const Vec2 b = v[(i + 1) % m];
    const double fa = f(a);
    const double fb = f(b);
    if (fa <= 0) out.push_back(a);
    if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) {
      const double t = fa / (fa - fb);
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  return polygon_area(out);
}

}  // namespace rpvt
