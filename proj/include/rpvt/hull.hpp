#pragma once

#include <span>
#include <vector>

#include "rpvt/sampling.hpp"

namespace rpvt {

struct HullFacet {
  std::vector<int> vertex_indices;  // exactly dim affinely independent vertices
  std::vector<double> normal;       // outward unit normal
  double offset = 0.0;              // <normal, p> <= offset for all input points
};

/// Vertex/facet representation of conv{points}. A degenerate flag marks
/// affinely dependent input (lower-dimensional hull, volume 0).
struct HullRep {
  int dim = 0;
  std::size_t input_count = 0;
  bool degenerate = false;
  double tol = 0.0;
  std::vector<int> vertices;        // indices of input points on the hull
  std::vector<HullFacet> facets;
  std::vector<double> interior;     // a strictly interior point (if non-degenerate)
  std::vector<double> coords;       // copy of the input points, row-major
};

/// Incremental (beneath-beyond) convex hull, dim <= 8.
HullRep build_hull(std::span<const double> points, std::size_t count, int dim);
HullRep build_hull(const SampleSet& points);

/// Exact volume by fan decomposition from the interior point. Zero for a
/// degenerate hull.
double hull_volume(const HullRep& hull);

}  // namespace rpvt
