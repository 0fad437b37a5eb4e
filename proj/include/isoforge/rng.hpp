#pragma once

#include "isoforge/metric.hpp"

#include <cstdint>
#include <random>

namespace isoforge {

// Deterministic sampling for reports and property sweeps.  The 53-bit
// mapping is pinned here instead of std::uniform_real_distribution, whose
// exact output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // [0, 1)
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Vector uniform_vector(int d, double lo, double hi) {
    Vector v(d);
    for (int k = 0; k < d; ++k) v(k) = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace isoforge
