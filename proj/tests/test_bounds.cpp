#include <stdexcept>
#include <cmath>

#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "rpvt/bounds.hpp"

using namespace rpvt;

TEST_CASE("central upper bound") {
  CHECK(central_upper(0.0, 0.3, 2.0, 100) == doctest::Approx(60.0));
  CHECK(central_upper(3.0, 0.0, 2.0, 100) == doctest::Approx(3.0));
  CHECK(central_upper(1.0, std::exp(-10.0), 1.0, 1000) ==
        doctest::Approx(1.0 + 1000.0 * std::exp(-10.0)).epsilon(1e-12));
  CHECK_THROWS_AS(central_upper(-1.0, 0.5, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(central_upper(1.0, 1.5, 1.0, 10), std::invalid_argument);
}

TEST_CASE("central lower bound: trivial regimes") {
  // inf_q = 1 removes the correction entirely
  const auto full = central_lower(2.5, 1.0, 100, 3);
  CHECK(full.lower == doctest::Approx(2.5));
  CHECK_FALSE(full.clamped);
  // N = n+1, inf_q = 0: raw = volA (1 - 2(n+1)) < 0, clamped
  const auto vac = central_lower(1.0, 0.0, 11, 10);
  CHECK(vac.lower == 0.0);
  CHECK(vac.lower_raw == doctest::Approx(1.0 - 2.0 * 11.0));
  CHECK(vac.clamped);
  // N <= n is degenerate
  const auto deg = central_lower(1.0, 0.5, 10, 10);
  CHECK(deg.degenerate);
  CHECK(deg.lower == 0.0);
}

TEST_CASE("central lower bound against a big-float oracle") {
  // volA=1, n=10, N=1e4, q=0.01: 1 - 2 C(1e4,10) 0.99^9990
  namespace mp = boost::multiprecision;
  mp::cpp_int binom = 1;
  for (long long i = 0; i < 10; ++i) {
    binom *= 10000 - i;
    binom /= i + 1;
  }
  using bf = mp::cpp_bin_float_100;
  const bf corr = 2 * bf(binom) * pow(bf(99) / bf(100), 9990);
  const double oracle = static_cast<double>(1 - corr);
  const auto rep = central_lower(1.0, 0.01, 10000, 10);
  CHECK(rep.lower_raw == doctest::Approx(oracle).epsilon(1e-10));
  CHECK_FALSE(rep.degenerate);
}

TEST_CASE("central lower bound is nondecreasing in N past the vacuous regime") {
  double prev = -1e300;
  for (long long N : {50LL, 100LL, 200LL, 500LL, 2000LL}) {
    const double v = central_lower(1.0, 0.05, N, 3).lower;
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(prev > 0.99);
}

TEST_CASE("threshold formulas") {
  ThresholdQuery q;
  q.family = ThresholdFamily::cube_vertices;
  q.n = 15;
  auto r = threshold_N(q);
  CHECK(r.n_low == doctest::Approx(std::pow(2.0 / std::sqrt(M_E), 15)).epsilon(1e-12));
  CHECK(r.n_low == doctest::Approx(18.1235).epsilon(1e-4));
  CHECK(r.n_high == r.n_low);

  // epsilon splits the base exactly: N_high/N_low = ((nu+eps)/(nu-eps))^n
  q.epsilon = 0.1;
  r = threshold_N(q);
  const double nu = 2.0 / std::sqrt(M_E);
  CHECK(r.n_high / r.n_low ==
        doctest::Approx(std::pow((nu + 0.1) / (nu - 0.1), 15)).epsilon(1e-9));

  q.family = ThresholdFamily::cube_solid;
  q.epsilon = 0.0;
  q.n = 1;
  r = threshold_N(q);
  CHECK(r.n_low == doctest::Approx(2.139).epsilon(1e-3));  // 2 pi e^{-gamma-1/2}

  q.family = ThresholdFamily::ball;
  q.n = 4;
  r = threshold_N(q);
  CHECK(r.n_low == doctest::Approx(16.0).epsilon(1e-12));

  q.family = ThresholdFamily::beta;
  q.n = 4;
  q.beta_param = 1.0;
  r = threshold_N(q);
  CHECK(r.n_low == doctest::Approx(std::exp(3.0 * std::log(4.0))).epsilon(1e-12));

  q.family = ThresholdFamily::beta_refined;
  q.n = 10;
  q.beta_param = 1.0;
  q.epsilon = 1.0;  // c
  r = threshold_N(q);
  CHECK(r.n_low == doctest::Approx(15625.0).epsilon(1e-9));
  CHECK(r.n_high == doctest::Approx(15625.0).epsilon(1e-9));

  // log values stay finite when the plain value overflows
  q.family = ThresholdFamily::ball;
  q.n = 500;
  q.epsilon = 0.0;
  r = threshold_N(q);
  CHECK(std::isinf(r.n_low));
  CHECK(r.log_n_low == doctest::Approx(250.0 * std::log(500.0)).epsilon(1e-12));

  q.family = ThresholdFamily::cube_vertices;
  q.epsilon = 1.5;
  CHECK_THROWS_AS(threshold_N(q), std::invalid_argument);
  q.family = ThresholdFamily::beta_refined;
  q.epsilon = 0.0;
  CHECK_THROWS_AS(threshold_N(q), std::invalid_argument);
}

TEST_CASE("family name round trip") {
  for (const char* name :
       {"cube_vertices", "cube_solid", "ball", "beta", "beta_refined"}) {
    CHECK(to_string(threshold_family_from_string(name)) == name);
  }
  CHECK_THROWS_AS(threshold_family_from_string("nope"), std::invalid_argument);
}

TEST_CASE("theorem envelopes") {
  const auto env = thm1_envelope(100, 1.0);
  CHECK(env.n_max == doctest::Approx(M_E).epsilon(1e-12));
  CHECK(env.ratio_cap == doctest::Approx(1.0 / M_E).epsilon(1e-12));
  // L -> infinity makes the bound vacuous
  const auto vac = thm1_envelope(100, 1e9);
  CHECK(vac.n_max == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(vac.ratio_cap == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(thm1_envelope(10, 1.0, 0.0, 0.01), std::invalid_argument);

  CHECK(thm2_required_N(2, 0.25, M_E) ==
        doctest::Approx(std::exp(4.0 * (std::log(2.0) + 2.0))).epsilon(1e-12));
  CHECK(thm2_required_N(2, 0.25, 1.0 + 1e-12) == doctest::Approx(16.0).epsilon(1e-6));
  CHECK(thm2_required_N(3, 0.2, 10.0) == doctest::Approx(2.43e12).epsilon(1e-9));
  CHECK_THROWS_AS(thm2_required_N(3, 0.5, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(thm2_required_N(3, 0.2, 0.5), std::invalid_argument);

  CHECK(thm2_floating_radius(0.3, 0.0).radius == doctest::Approx(1.0));
  CHECK(thm2_floating_radius(1.0, 1.0 / 32.0).radius == doctest::Approx(0.5));
  const auto fr = thm2_floating_radius(0.2, 1.0 / 1920.0);
  CHECK(fr.radius == doctest::Approx(1.0 - std::pow(80.0, 0.2) / 1920.0).epsilon(1e-12));
  CHECK(fr.radius == doctest::Approx(0.99874).epsilon(1e-4));
  CHECK(thm2_floating_radius(0.2, 10.0).vacuous);
}

TEST_CASE("calculators are pure: equal inputs, bitwise-equal outputs") {
  ThresholdQuery q;
  q.family = ThresholdFamily::beta;
  q.n = 7;
  q.epsilon = 0.3;
  q.beta_param = 1.25;
  const auto a = threshold_N(q);
  const auto b = threshold_N(q);
  CHECK(a.n_low == b.n_low);
  CHECK(a.n_high == b.n_high);
  CHECK(central_lower(1.5, 0.125, 777, 5).lower_raw ==
        central_lower(1.5, 0.125, 777, 5).lower_raw);
}
