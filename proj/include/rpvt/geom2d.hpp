#pragma once

#include <vector>

namespace rpvt {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double cross(Vec2 o, Vec2 a, Vec2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double polygon_area(const std::vector<Vec2>& vertices);

/// Convex hull of a planar point set, counter-clockwise (monotone chain).
/// Collinear interior points are dropped. Fewer than 3 distinct points
/// give a degenerate (possibly empty) result.
std::vector<Vec2> convex_hull_2d(std::vector<Vec2> points);

/// Convex counter-clockwise polygon. The 2-D module is the exact oracle
/// the n-D estimators are validated against, so the constructor rejects
/// anything that is not convex CCW.
class Polygon2D {
 public:
  explicit Polygon2D(std::vector<Vec2> vertices);

  static Polygon2D square(double half_side);
  static Polygon2D regular(int sides, double radius);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  double area() const { return area_; }
  bool contains(Vec2 p, double tol = 1e-12) const;

 private:
  std::vector<Vec2> vertices_;
  double area_;
};

/// Exact area of P ∩ {x : <x, direction> <= offset} by single-plane
/// clipping. Throws std::invalid_argument on a zero-area polygon or a
/// zero direction.
double halfplane_polygon_measure(const Polygon2D& poly, Vec2 direction, double offset);

}  // namespace rpvt
