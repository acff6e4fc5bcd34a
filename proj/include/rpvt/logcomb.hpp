#pragma once

#include <cmath>
#include <stdexcept>

namespace rpvt {

/// ln C(N, n) via log-gamma. Overflow-free for any N that fits a long long.
inline double log_binomial(long long N, long long n) {
  if (n < 0 || N < 0 || n > N) {
    throw std::domain_error("log_binomial: require 0 <= n <= N");
  }
  if (n == 0 || n == N) return 0.0;
  // For a short factor list the direct sum avoids the catastrophic
  // cancellation of three large log-gamma values.
  const long long k = n < N - n ? n : N - n;
  if (k <= 512) {
    double acc = 0.0;
    for (long long i = 0; i < k; ++i) {
      acc += std::log(static_cast<double>(N - i)) - std::log(static_cast<double>(i + 1));
    }
    return acc;
  }
  return std::lgamma(static_cast<double>(N) + 1.0) -
         std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(N - n) + 1.0);
}

}  // namespace rpvt
