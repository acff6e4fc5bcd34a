#include "rpvt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rpvt/logcomb.hpp"

namespace rpvt {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace

double central_upper(double volA, double sup_q_outside, double wet_vol, long long N) {
  if (volA < 0.0 || wet_vol < 0.0 || N < 0) {
    throw std::invalid_argument("central_upper: inputs must be >= 0");
  }
  if (sup_q_outside < 0.0 || sup_q_outside > 1.0) {
    throw std::invalid_argument("central_upper: sup_q_outside must be in [0, 1]");
  }
  return volA + static_cast<double>(N) * sup_q_outside * wet_vol;
}

BoundsReport central_lower(double volA, double inf_q_inside, long long N, int n) {
  if (inf_q_inside < 0.0 || inf_q_inside > 1.0) {
    throw std::invalid_argument("central_lower: inf_q_inside must be in [0, 1]");
  }
  BoundsReport rep;
  rep.vol_A = volA;
  rep.inf_q_inside = inf_q_inside;
  rep.N = N;
  rep.n = n;
  if (N <= n) {
    rep.degenerate = true;
    rep.clamped = true;
    return rep;
  }
  // 2 C(N,n) (1 - q)^{N-n} in log domain; log1p(-q) is -inf at q = 1,
  // which correctly drives the correction to 0
  const double log_corr = std::log(2.0) + log_binomial(N, n) +
                          static_cast<double>(N - n) * std::log1p(-inf_q_inside);
  rep.lower_raw = volA * (1.0 - std::exp(log_corr));
  rep.lower = std::max(0.0, rep.lower_raw);
  rep.clamped = rep.lower != rep.lower_raw;
  return rep;
}

ThresholdFamily threshold_family_from_string(const std::string& name) {
  if (name == "cube_vertices") return ThresholdFamily::cube_vertices;
  if (name == "cube_solid") return ThresholdFamily::cube_solid;
  if (name == "ball") return ThresholdFamily::ball;
  if (name == "beta") return ThresholdFamily::beta;
  if (name == "beta_refined") return ThresholdFamily::beta_refined;
  throw std::invalid_argument("unknown threshold family: " + name);
}

std::string to_string(ThresholdFamily family) {
  switch (family) {
    case ThresholdFamily::cube_vertices: return "cube_vertices";
    case ThresholdFamily::cube_solid: return "cube_solid";
    case ThresholdFamily::ball: return "ball";
    case ThresholdFamily::beta: return "beta";
    case ThresholdFamily::beta_refined: return "beta_refined";
  }
  throw std::invalid_argument("unknown threshold family");
}

ThresholdResult threshold_N(const ThresholdQuery& q) {
  if (q.n < 1) throw std::invalid_argument("threshold_N: n must be >= 1");
  ThresholdResult res;
  switch (q.family) {
    case ThresholdFamily::cube_vertices:
    case ThresholdFamily::cube_solid: {
      // N grows like nu^n; epsilon shifts the base
      if (q.epsilon < 0.0 || q.epsilon >= 1.0) {
        throw std::invalid_argument("threshold_N: epsilon must be in [0, 1)");
      }
      const double nu = q.family == ThresholdFamily::cube_vertices
                            ? 2.0 / std::sqrt(M_E)
                            : 2.0 * M_PI * std::exp(-kEulerGamma - 0.5);
      res.log_n_low = q.n * std::log(nu - q.epsilon);
      res.log_n_high = q.n * std::log(nu + q.epsilon);
      break;
    }
    case ThresholdFamily::ball: {
      if (q.epsilon < 0.0 || q.epsilon >= 1.0) {
        throw std::invalid_argument("threshold_N: epsilon must be in [0, 1)");
      }
      const double base = 0.5 * q.n * std::log(static_cast<double>(q.n));
      res.log_n_low = (1.0 - q.epsilon) * base;
      res.log_n_high = (1.0 + q.epsilon) * base;
      break;
    }
    case ThresholdFamily::beta: {
      if (q.epsilon < 0.0 || q.epsilon >= 1.0) {
        throw std::invalid_argument("threshold_N: epsilon must be in [0, 1)");
      }
      const double base =
          (0.5 * q.n + q.beta_param) * std::log(static_cast<double>(q.n));
      res.log_n_low = (1.0 - q.epsilon) * base;
      res.log_n_high = (1.0 + q.epsilon) * base;
      break;
    }
    case ThresholdFamily::beta_refined: {
      const double c = q.epsilon;  // limit parameter: ratio -> e^{-c}
      if (c <= 0.0) throw std::invalid_argument("threshold_N: c must be > 0");
      const double v = (0.5 * q.n + q.beta_param) * std::log(0.5 * q.n / c);
      res.log_n_low = v;
      res.log_n_high = v;
      break;
    }
  }
  res.n_low = std::exp(res.log_n_low);
  res.n_high = std::exp(res.log_n_high);
  return res;
}

Thm1Envelope thm1_envelope(int n, double L_mu, double c1, double c2) {
  if (c1 <= 0.0 || c2 <= 0.0) throw std::invalid_argument("thm1_envelope: c1, c2 must be > 0");
  if (L_mu <= 0.0) throw std::invalid_argument("thm1_envelope: L_mu must be > 0");
  const double e = n / (L_mu * L_mu);
  return {std::exp(c1 * e), std::exp(-c2 * e)};
}

double thm2_required_N(int n, double kappa, double omega) {
  if (kappa <= 0.0 || kappa >= 1.0 / n) {
    throw std::invalid_argument("thm2_required_N: kappa must be in (0, 1/n)");
  }
  if (omega <= 1.0) throw std::invalid_argument("thm2_required_N: omega must be > 1");
  return std::exp((std::log(static_cast<double>(n)) + 2.0 * std::log(omega)) / kappa);
}

FloatingRadius thm2_floating_radius(double kappa, double beta_level) {
  if (kappa <= 0.0 || beta_level < 0.0) {
    throw std::invalid_argument("thm2_floating_radius: kappa > 0, beta_level >= 0 required");
  }
  const double shrink = std::pow(16.0 / kappa, kappa) * beta_level;
  if (shrink >= 1.0) return {0.0, true};
  return {1.0 - shrink, false};
}

}  // namespace rpvt
