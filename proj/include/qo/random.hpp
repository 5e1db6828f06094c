#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qo/timbre.hpp"

namespace qo {

/// Seeded sampler for randomized searches and property tests. The engine's
/// output sequence is fixed by the standard; the distributions are written out
/// here so draws do not depend on the standard library in use.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// Uniform point on the probability simplex of dimension n (normalized
  /// exponential draws).
  std::vector<double> simplex_point(std::size_t n) {
    std::vector<double> v(n);
    double sum = 0.0;
    for (auto& x : v) {
      x = -std::log1p(-uniform());
      sum += x;
    }
    for (auto& x : v) x /= sum;
    return v;
  }

  TimbralVector timbral(std::size_t n) { return TimbralVector(simplex_point(n)); }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qo
