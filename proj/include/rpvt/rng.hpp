#pragma once

#include <cmath>
#include <cstdint>

namespace rpvt {

/// Identifies one reproducible variate stream. The pair (master_seed,
/// stream_id) fully determines the stream; distinct stream_ids give
/// independent-looking streams, so parallel tasks can each own one.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  SeedSpec with_stream(std::uint64_t id) const { return {master_seed, id}; }
};

namespace detail {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace detail

/// Counter-based uniform stream: variate i is a pure function of
/// (master_seed, stream_id, i). No state beyond the counter, so results
/// are identical under any parallel schedule or thread count.
class RngStream {
 public:
  explicit RngStream(SeedSpec seed)
      : seed_(seed),
        key_(detail::mix64(seed.master_seed ^
                           detail::mix64(seed.stream_id + 0x9E3779B97F4A7C15ULL))) {}

  SeedSpec seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64() {
    ++counter_;
    return detail::mix64(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform in [0, 1).
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_uniform(double a, double b) { return a + (b - a) * next_uniform(); }

  /// Standard normal (Box-Muller; the spare is cached).
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = next_uniform();
    double u2 = next_uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Gamma(shape, 1) via Marsaglia-Tsang, shape boost below 1.
  double next_gamma(double shape) {
    if (shape < 1.0) {
      const double u = next_uniform();
      return next_gamma(shape + 1.0) * std::pow(u > 0 ? u : 1e-300, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = next_normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = next_uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (u > 0 && std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
  }

  double next_beta(double a, double b) {
    const double ga = next_gamma(a);
    const double gb = next_gamma(b);
    return ga / (ga + gb);
  }

  /// Uniform direction on S^{dim-1}, written into out[0..dim).
  void next_unit_vector(int dim, double* out) {
    for (;;) {
      double norm2 = 0.0;
      for (int i = 0; i < dim; ++i) {
        out[i] = next_normal();
        norm2 += out[i] * out[i];
      }
      if (norm2 > 1e-24) {
        const double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < dim; ++i) out[i] *= inv;
        return;
      }
    }
  }

 private:
  SeedSpec seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rpvt
