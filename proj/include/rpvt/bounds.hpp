#pragma once

#include <string>

namespace rpvt {

/// Expected-hull-volume sandwich evaluated from measured ingredients:
///   lower = |A| (1 - 2 C(N,n) (1 - inf_A q)^{N-n})
///   upper = |A| + N sup_{A^c} q |wet|
struct BoundsReport {
  double lower = 0.0;      // clamped to [0, upper]
  double lower_raw = 0.0;  // may be negative (vacuous bound)
  double upper = 0.0;
  double vol_A = 0.0;
  double inf_q_inside = 0.0;
  double sup_q_outside = 0.0;
  double wet_vol = 0.0;
  long long N = 0;
  int n = 0;
  bool clamped = false;
  bool degenerate = false;  // N <= n
};

double central_upper(double volA, double sup_q_outside, double wet_vol, long long N);

BoundsReport central_lower(double volA, double inf_q_inside, long long N, int n);

enum class ThresholdFamily { cube_vertices, cube_solid, ball, beta, beta_refined };

ThresholdFamily threshold_family_from_string(const std::string& name);
std::string to_string(ThresholdFamily family);

struct ThresholdQuery {
  ThresholdFamily family = ThresholdFamily::cube_vertices;
  int n = 0;
  double epsilon = 0.0;     // or c for beta_refined
  double beta_param = 0.0;  // beta and beta_refined only
};

/// Crossover sample counts; exponentials carried in the log fields, the
/// plain values may round to +inf past ~e^700.
struct ThresholdResult {
  double n_low = 0.0;
  double n_high = 0.0;
  double log_n_low = 0.0;
  double log_n_high = 0.0;
};

ThresholdResult threshold_N(const ThresholdQuery& q);

struct Thm1Envelope {
  double n_max = 0.0;      // e^{c1 n / L^2}
  double ratio_cap = 0.0;  // e^{-c2 n / L^2}
};

// c1, c2 default 0.01: engineering placeholders, not values from theory
Thm1Envelope thm1_envelope(int n, double L_mu, double c1 = 0.01, double c2 = 0.01);

/// (n omega^2)^{1/kappa}; requires kappa in (0, 1/n), omega > 1.
double thm2_required_N(int n, double kappa, double omega);

struct FloatingRadius {
  double radius = 0.0;  // 1 - (16/kappa)^kappa * beta_level
  bool vacuous = false;
};

FloatingRadius thm2_floating_radius(double kappa, double beta_level);

}  // namespace rpvt
