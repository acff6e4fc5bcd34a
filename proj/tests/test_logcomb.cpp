#include <stdexcept>
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "rpvt/logcomb.hpp"

using namespace rpvt;

namespace {

// exact big-integer binomial, then log in 100-digit floats
double log_binomial_oracle(long long N, long long n) {
  namespace mp = boost::multiprecision;
  mp::cpp_int c = 1;
  for (long long i = 0; i < n; ++i) {
    c *= N - i;
    c /= i + 1;
  }
  return static_cast<double>(log(mp::cpp_bin_float_100(c)));
}

}  // namespace

TEST_CASE("small exact values") {
  CHECK(log_binomial(0, 0) == 0.0);
  CHECK(log_binomial(10, 0) == 0.0);
  CHECK(log_binomial(10, 10) == 0.0);
  CHECK(std::exp(log_binomial(5, 2)) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(std::exp(log_binomial(52, 5)) == doctest::Approx(2598960.0).epsilon(1e-11));
}

TEST_CASE("large arguments against the big-integer oracle") {
  for (auto [N, n] : {std::pair<long long, long long>{1000000, 20},
                      {10000, 10},
                      {10000, 5000},
                      {123456, 321}}) {
    CHECK(log_binomial(N, n) == doctest::Approx(log_binomial_oracle(N, n)).epsilon(1e-12));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(log_binomial(5, 6), std::domain_error);
  CHECK_THROWS_AS(log_binomial(-1, 0), std::domain_error);
  CHECK_THROWS_AS(log_binomial(5, -1), std::domain_error);
}
