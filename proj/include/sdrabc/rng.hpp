#pragma once

#include <cmath>
#include <cstdint>

#include "sdrabc/errors.hpp"

namespace sdrabc {

/// Philox 4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// A stream is addressed by (seed, stream): the seed forms the cipher key and
/// the stream id occupies the high counter words. Draw j of stream i is a pure
/// function of (seed, i, j), so replication studies can hand stream i to
/// worker threads in any order and still produce identical numbers.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream) : stream_(stream) {
    key0_ = static_cast<std::uint32_t>(seed);
    key1_ = static_cast<std::uint32_t>(seed >> 32);
  }

  std::uint64_t next_u64() {
    if (word_ >= 4) refill();
    std::uint64_t lo = block_[word_];
    std::uint64_t hi = block_[word_ + 1];
    word_ += 2;
    return lo | (hi << 32);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via the Marsaglia polar method; the paired deviate is
  /// cached, so results depend only on the stream position.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    while (true) {
      double u = 2.0 * uniform() - 1.0;
      double v = 2.0 * uniform() - 1.0;
      double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) {
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
      }
    }
  }

  double exponential(double mean) {
    // 1 - uniform() lies in (0, 1], so the log is finite.
    return -mean * std::log(1.0 - uniform());
  }

  /// Gamma(shape, scale) by Marsaglia-Tsang squeeze; shape < 1 boosted.
  double gamma_draw(double shape, double scale) {
    if (shape <= 0.0 || scale <= 0.0) throw ArgumentError("gamma_draw: shape and scale must be positive");
    if (shape < 1.0) {
      double u = uniform();
      while (u <= 0.0) u = uniform();
      return gamma_draw(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
      double x = normal();
      double t = 1.0 + c * x;
      if (t <= 0.0) continue;
      double v = t * t * t;
      double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
  }

  std::uint64_t stream() const { return stream_; }

 private:
  static void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t* lo, std::uint32_t* hi) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    *lo = static_cast<std::uint32_t>(p);
    *hi = static_cast<std::uint32_t>(p >> 32);
  }

  void refill() {
    std::uint32_t c0 = static_cast<std::uint32_t>(counter_);
    std::uint32_t c1 = static_cast<std::uint32_t>(counter_ >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream_);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream_ >> 32);
    std::uint32_t k0 = key0_, k1 = key1_;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        k0 += 0x9E3779B9u;
        k1 += 0xBB67AE85u;
      }
      std::uint32_t lo0, hi0, lo1, hi1;
      mul_hi_lo(0xD2511F53u, c0, &lo0, &hi0);
      mul_hi_lo(0xCD9E8D57u, c2, &lo1, &hi1);
      std::uint32_t n0 = hi1 ^ c1 ^ k0;
      std::uint32_t n1 = lo1;
      std::uint32_t n2 = hi0 ^ c3 ^ k1;
      std::uint32_t n3 = lo0;
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
    }
    block_[0] = c0;
    block_[1] = c1;
    block_[2] = c2;
    block_[3] = c3;
    ++counter_;
    word_ = 0;
  }

  std::uint32_t key0_ = 0, key1_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t counter_ = 0;
  std::uint32_t block_[4] = {0, 0, 0, 0};
  int word_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sdrabc
