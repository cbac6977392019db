#pragma once

// Seeded generators for property tests. Each trial gets its own stream so a
// failure can be replayed from the printed seed alone.

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <string>

#include "dcs/projective.hpp"

namespace dcs::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  Complex gaussian() {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng_);
    return {re, n(rng_)};
  }
  // log-uniform modulus over many decades, random phase
  Complex scalar() {
    const double r = std::pow(10.0, uniform(-6.0, 6.0));
    return std::polar(r, uniform(0.0, 6.283185307179586));
  }
  HPoint point(int n) {
    CVector v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = gaussian();
    return HPoint(v);
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

template <class F>
void for_all(std::uint64_t seed, int trials, F&& body) {
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(i);
    SCOPED_TRACE("trial seed " + std::to_string(s));
    Gen g(s);
    body(g);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

}  // namespace dcs::test
