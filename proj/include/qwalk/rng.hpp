#pragma once

#include <cstdint>

#include "qwalk/common.hpp"

namespace qwalk {

/// Counter-based deterministic generator (splitmix64 core). Every draw is a
/// pure function of (seed, stream, counter), so runs with the same seed are
/// reproducible bit-for-bit regardless of call-site reordering between
/// streams. Streams are cheap: derive one per logical consumer.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ULL))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    // Modulo bias is irrelevant at the sizes used here (n << 2^64).
    return next_u64() % n;
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im);
  }

  /// Haar-like random unit state of dimension n.
  Vector unit_vector(int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = complex_gaussian();
    v /= v.norm();
    return v;
  }

  /// Random Hermitian matrix with entries of order `scale` (mixed signs,
  /// unconstrained trace).
  Matrix hermitian(int n, double scale = 1.0) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = complex_gaussian();
    Matrix h = 0.5 * scale * (a + a.adjoint());
    return h;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qwalk
