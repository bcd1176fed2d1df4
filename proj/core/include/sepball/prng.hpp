// Copyright 2026 The Sepball Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace sepball {

/**
 * Deterministic random stream. mt19937_64 produces the same bits on every
 * platform, and the gaussian/sphere samplers are spelled out here so results
 * do not depend on the standard library's distribution implementations.
 */
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream derived from (seed, index); used to make concurrent
  // restarts reproducible regardless of scheduling.
  static Prng substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return Prng(z ^ (z >> 31));
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    do {
      u = uniform();
    } while (u <= 0.0);
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * 3.14159265358979323846 * v;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
  }

  /// Uniform point on the unit sphere S^2.
  std::array<double, 3> unit3() {
    while (true) {
      std::array<double, 3> g{gaussian(), gaussian(), gaussian()};
      const double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
      if (n > 1e-12) return {g[0] / n, g[1] / n, g[2] / n};
    }
  }

  /// Uniform point in the closed unit ball of R^3.
  std::array<double, 3> ball3() {
    const auto s = unit3();
    const double r = std::cbrt(uniform());
    return {r * s[0], r * s[1], r * s[2]};
  }

  /// Uniform direction in R^dim.
  std::vector<double> unit_vector(int dim) {
    while (true) {
      std::vector<double> g(static_cast<std::size_t>(dim));
      double norm_sq = 0.0;
      for (double& x : g) {
        x = gaussian();
        norm_sq += x * x;
      }
      if (norm_sq > 1e-24) {
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (double& x : g) x *= inv;
        return g;
      }
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sepball
