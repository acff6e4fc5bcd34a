#pragma once

#include <span>
#include <vector>

#include "rpvt/sampling.hpp"

namespace rpvt {

enum class MembershipStatus { inside, outside, indeterminate };

struct MembershipResult {
  MembershipStatus status = MembershipStatus::indeterminate;
  /// inside: certified upper bound on dist(y, conv X). outside: certified
  /// positive lower bound (margin of the separator).
  double distance_bound = 0.0;
  /// outside: unit direction with max_i <x_i - y, separator> < 0.
  std::vector<double> separator;
  /// inside: convex coefficients over witness_support reproducing a point
  /// within distance_bound of y.
  std::vector<int> witness_support;
  std::vector<double> witness_coeffs;
  int iterations = 0;
};

/// Scratch buffers reused across probes of one replication; carrying the
/// previous active set warm-starts the next query.
struct MembershipScratch {
  std::vector<double> z;
  std::vector<int> support;
  std::vector<double> coeffs;
};

/// Tests dist(y, conv{points}) <= tol by min-norm-point iteration
/// (pairwise Frank-Wolfe) on the shifted set {x_i - y}. Stops inside when
/// the current norm certificate reaches tol, outside when a separating
/// direction is found, indeterminate at the iteration cap.
MembershipResult membership(std::span<const double> y, const SampleSet& points, double tol,
                            int max_iterations = 50000, MembershipScratch* scratch = nullptr);

/// Default tolerance: 1e-9 times the diameter of the point set.
double default_membership_tol(const SampleSet& points);

}  // namespace rpvt
