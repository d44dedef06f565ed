#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace scg {

// Deterministic splitmix64 generator. All randomness in the toolkit flows
// through this type so results are identical across platforms, runs and
// worker counts. Independent streams are derived from (seed, stream id),
// which lets parallel consumers (for example one stream per forest tree)
// draw without sharing state.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(scramble(seed ^ kGamma)) {}

  Rng(uint64_t seed, uint64_t stream)
      : state_(scramble(scramble(seed ^ kGamma) + (stream + 1) * kGamma)) {}

  Rng stream(uint64_t stream_id) const { return Rng(state_, stream_id); }

  uint64_t next_u64() {
    state_ += kGamma;
    return scramble(state_);
  }

  // Uniform in [0, 1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); rejection keeps it unbiased.
  uint64_t next_below(uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t x, r;
    do {
      x = next_u64();
      r = x % bound;
    } while (x - r > static_cast<uint64_t>(-bound));
    return r;
  }

  // Standard normal via Box-Muller; the spare value is cached.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    if (u1 < 1e-300) u1 = 1e-300;
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // First k entries of a Fisher-Yates shuffle of 0..n-1.
  std::vector<size_t> sample_without_replacement(size_t n, size_t k) {
    if (k > n) k = n;
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    for (size_t i = 0; i < k; ++i) {
      const size_t j = i + static_cast<size_t>(next_below(n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static uint64_t scramble(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace scg
