#include "rpvt/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "rpvt/geom2d.hpp"

namespace rpvt {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::span<const double> pt(const std::vector<double>& coords, int dim, int i) {
  return {coords.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
}

// |det| of a d x d matrix (row-major), by partial-pivot elimination.
double abs_det(std::vector<double>& m, int d) {
  double det = 1.0;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    for (int r = c + 1; r < d; ++r) {
      if (std::abs(m[r * d + c]) > std::abs(m[piv * d + c])) piv = r;
    }
    if (m[piv * d + c] == 0.0) return 0.0;
    if (piv != c) {
      for (int k = 0; k < d; ++k) std::swap(m[piv * d + k], m[c * d + k]);
    }
    det *= m[c * d + c];
    for (int r = c + 1; r < d; ++r) {
      const double f = m[r * d + c] / m[c * d + c];
      for (int k = c; k < d; ++k) m[r * d + k] -= f * m[c * d + k];
    }
  }
  return std::abs(det);
}

double factorial(int d) {
  double f = 1.0;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

struct QhFacet {
  std::vector<int> verts;
  std::vector<double> normal;
  double offset = 0.0;
  std::vector<int> outside;
  bool alive = true;
};

// Unit normal of the hyperplane through the given d points, oriented so
// that <n, interior> < offset. Returns false when the points are
// (numerically) affinely dependent.
bool facet_plane(const std::vector<double>& coords, int dim, const std::vector<int>& verts,
                 std::span<const double> interior, std::vector<double>& normal,
                 double& offset) {
  // orthonormalize the edge vectors, then pick the largest residual of the
  // coordinate basis as the normal
  std::vector<std::vector<double>> basis;
  const auto p0 = pt(coords, dim, verts[0]);
  for (int k = 1; k < dim; ++k) {
    std::vector<double> v(dim);
    const auto pk = pt(coords, dim, verts[k]);
    for (int i = 0; i < dim; ++i) v[i] = pk[i] - p0[i];
    for (const auto& b : basis) {
      const double c = dot(v, b);
      for (int i = 0; i < dim; ++i) v[i] -= c * b[i];
    }
    const double nrm = std::sqrt(dot(v, v));
    if (nrm < 1e-13) return false;
    for (double& x : v) x /= nrm;
    basis.push_back(std::move(v));
  }
  double best = -1.0;
  normal.assign(dim, 0.0);
  for (int e = 0; e < dim; ++e) {
    std::vector<double> v(dim, 0.0);
    v[e] = 1.0;
    for (const auto& b : basis) {
      const double c = dot(v, b);
      for (int i = 0; i < dim; ++i) v[i] -= c * b[i];
    }
    const double nrm = std::sqrt(dot(v, v));
    if (nrm > best) {
      best = nrm;
      normal = std::move(v);
    }
  }
  if (best < 1e-13) return false;
  for (double& x : normal) x /= best;
  offset = dot(normal, p0);
  if (dot(normal, interior) > offset) {
    for (double& x : normal) x = -x;
    offset = -offset;
  }
  return true;
}

HullRep hull_1d(HullRep rep) {
  int lo = 0, hi = 0;
  for (std::size_t i = 1; i < rep.input_count; ++i) {
    if (rep.coords[i] < rep.coords[lo]) lo = static_cast<int>(i);
    if (rep.coords[i] > rep.coords[hi]) hi = static_cast<int>(i);
  }
  if (rep.coords[hi] - rep.coords[lo] <= rep.tol) {
    rep.degenerate = true;
    return rep;
  }
  rep.vertices = {lo, hi};
  rep.facets.push_back({{hi}, {1.0}, rep.coords[hi]});
  rep.facets.push_back({{lo}, {-1.0}, -rep.coords[lo]});
  rep.interior = {0.5 * (rep.coords[lo] + rep.coords[hi])};
  return rep;
}

HullRep hull_2d(HullRep rep) {
  std::vector<Vec2> pts(rep.input_count);
  for (std::size_t i = 0; i < rep.input_count; ++i) {
    pts[i] = {rep.coords[2 * i], rep.coords[2 * i + 1]};
  }
  const std::vector<Vec2> hull = convex_hull_2d(pts);
  if (hull.size() < 3 || polygon_area(hull) <= rep.tol * rep.tol) {
    rep.degenerate = true;
    return rep;
  }
  // map hull vertices back to input indices (first match wins)
  std::map<std::pair<double, double>, int> index;
  for (std::size_t i = 0; i < rep.input_count; ++i) {
    index.emplace(std::make_pair(pts[i].x, pts[i].y), static_cast<int>(i));
  }
  const std::size_t m = hull.size();
  rep.interior = {0.0, 0.0};
  for (const Vec2& v : hull) {
    rep.vertices.push_back(index.at({v.x, v.y}));
    rep.interior[0] += v.x / static_cast<double>(m);
    rep.interior[1] += v.y / static_cast<double>(m);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const int ia = rep.vertices[i];
    const int ib = rep.vertices[(i + 1) % m];
    const Vec2 a = hull[i];
    const Vec2 b = hull[(i + 1) % m];
    double nx = b.y - a.y;
    double ny = a.x - b.x;
    const double nrm = std::hypot(nx, ny);
    nx /= nrm;
    ny /= nrm;
    rep.facets.push_back({{ia, ib}, {nx, ny}, nx * a.x + ny * a.y});
  }
  return rep;
}

}  // namespace

HullRep build_hull(std::span<const double> points, std::size_t count, int dim) {
  if (dim < 1 || dim > 8) throw std::invalid_argument("build_hull: dim must be in [1, 8]");
  if (count < static_cast<std::size_t>(dim) + 1) {
    throw std::invalid_argument("build_hull: need at least dim+1 points");
  }
  if (points.size() != count * static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("build_hull: point buffer size mismatch");
  }

  HullRep rep;
  rep.dim = dim;
  rep.input_count = count;
  rep.coords.assign(points.begin(), points.end());

  // tol scales with the diameter (bounding-box diagonal)
  double diag2 = 0.0;
  for (int c = 0; c < dim; ++c) {
    double lo = rep.coords[c], hi = rep.coords[c];
    for (std::size_t i = 1; i < count; ++i) {
      lo = std::min(lo, rep.coords[i * dim + c]);
      hi = std::max(hi, rep.coords[i * dim + c]);
    }
    diag2 += (hi - lo) * (hi - lo);
  }
  rep.tol = 1e-9 * std::max(1e-300, std::sqrt(diag2));

  if (dim == 1) return hull_1d(std::move(rep));
  if (dim == 2) return hull_2d(std::move(rep));

  // --- initial affinely independent set (greedy farthest point) ---
  std::vector<int> simplex = {0};
  std::vector<std::vector<double>> basis;
  while (static_cast<int>(simplex.size()) <= dim) {
    const auto p0 = pt(rep.coords, dim, simplex[0]);
    int best = -1;
    double best_res = rep.tol;
    std::vector<double> best_dir;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<double> v(dim);
      const auto pi = pt(rep.coords, dim, static_cast<int>(i));
      for (int k = 0; k < dim; ++k) v[k] = pi[k] - p0[k];
      for (const auto& b : basis) {
        const double c = dot(v, b);
        for (int k = 0; k < dim; ++k) v[k] -= c * b[k];
      }
      const double res = std::sqrt(dot(v, v));
      if (res > best_res) {
        best_res = res;
        best = static_cast<int>(i);
        best_dir = std::move(v);
      }
    }
    if (best < 0) {
      rep.degenerate = true;
      return rep;
    }
    for (double& x : best_dir) x /= best_res;
    basis.push_back(std::move(best_dir));
    simplex.push_back(best);
  }

  rep.interior.assign(dim, 0.0);
  for (int idx : simplex) {
    const auto p = pt(rep.coords, dim, idx);
    for (int k = 0; k < dim; ++k) rep.interior[k] += p[k] / (dim + 1.0);
  }

  // --- initial simplex facets ---
  std::vector<QhFacet> facets;
  for (int omit = 0; omit <= dim; ++omit) {
    QhFacet f;
    for (int k = 0; k <= dim; ++k) {
      if (k != omit) f.verts.push_back(simplex[k]);
    }
    if (!facet_plane(rep.coords, dim, f.verts, rep.interior, f.normal, f.offset)) {
      rep.degenerate = true;
      return rep;
    }
    facets.push_back(std::move(f));
  }

  // assign outside points
  std::set<int> in_simplex(simplex.begin(), simplex.end());
  for (std::size_t i = 0; i < count; ++i) {
    const int idx = static_cast<int>(i);
    if (in_simplex.count(idx)) continue;
    const auto p = pt(rep.coords, dim, idx);
    for (QhFacet& f : facets) {
      if (dot(f.normal, p) > f.offset + rep.tol) {
        f.outside.push_back(idx);
        break;
      }
    }
  }

  // --- beneath-beyond main loop ---
  for (;;) {
    int fi = -1;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (facets[i].alive && !facets[i].outside.empty()) {
        fi = static_cast<int>(i);
        break;
      }
    }
    if (fi < 0) break;

    QhFacet& seed = facets[fi];
    int apex = seed.outside[0];
    double far_dist = -1.0;
    for (int idx : seed.outside) {
      const double d = dot(seed.normal, pt(rep.coords, dim, idx)) - seed.offset;
      if (d > far_dist) {
        far_dist = d;
        apex = idx;
      }
    }
    const auto apex_pt = pt(rep.coords, dim, apex);

    std::vector<int> visible;
    std::vector<int> orphans;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      QhFacet& f = facets[i];
      if (!f.alive) continue;
      if (dot(f.normal, apex_pt) > f.offset + rep.tol) {
        visible.push_back(static_cast<int>(i));
        f.alive = false;
        for (int idx : f.outside) {
          if (idx != apex) orphans.push_back(idx);
        }
        f.outside.clear();
      }
    }

    // horizon ridges appear exactly once among the visible facets
    std::map<std::vector<int>, int> ridge_count;
    for (int vi : visible) {
      const auto& verts = facets[vi].verts;
      for (std::size_t omit = 0; omit < verts.size(); ++omit) {
        std::vector<int> ridge;
        for (std::size_t k = 0; k < verts.size(); ++k) {
          if (k != omit) ridge.push_back(verts[k]);
        }
        std::sort(ridge.begin(), ridge.end());
        ++ridge_count[ridge];
      }
    }

    std::vector<int> fresh;
    for (const auto& [ridge, cnt] : ridge_count) {
      if (cnt != 1) continue;
      QhFacet f;
      f.verts = ridge;
      f.verts.push_back(apex);
      if (!facet_plane(rep.coords, dim, f.verts, rep.interior, f.normal, f.offset)) {
        continue;  // apex collinear with the ridge; neighbors cover it
      }
      fresh.push_back(static_cast<int>(facets.size()));
      facets.push_back(std::move(f));
    }

    for (int idx : orphans) {
      const auto p = pt(rep.coords, dim, idx);
      for (int ni : fresh) {
        QhFacet& f = facets[ni];
        if (dot(f.normal, p) > f.offset + rep.tol) {
          f.outside.push_back(idx);
          break;
        }
      }
    }
  }

  std::set<int> vset;
  for (const QhFacet& f : facets) {
    if (!f.alive) continue;
    rep.facets.push_back({f.verts, f.normal, f.offset});
    vset.insert(f.verts.begin(), f.verts.end());
  }
  rep.vertices.assign(vset.begin(), vset.end());
  return rep;
}

HullRep build_hull(const SampleSet& points) {
  return build_hull(points.points, points.count, points.dim);
}

double hull_volume(const HullRep& hull) {
  if (hull.degenerate) return 0.0;
  const int d = hull.dim;
  if (d == 1) {
    return hull.facets[0].offset + hull.facets[1].offset;
  }
  const double fd = factorial(d);
  std::vector<double> m(static_cast<std::size_t>(d) * d);
  double vol = 0.0;
  for (const HullFacet& f : hull.facets) {
    for (int r = 0; r < d; ++r) {
      const auto v = pt(hull.coords, d, f.vertex_indices[r]);
      for (int c = 0; c < d; ++c) m[r * d + c] = v[c] - hull.interior[c];
    }
    vol += abs_det(m, d) / fd;
  }
  return vol;
}

}  // namespace rpvt
