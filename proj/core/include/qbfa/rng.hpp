// Copyright 2026 The qbfa developers
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

#include <cmath>
#include <complex>
#include <cstdint>

namespace qbfa {

/**
 * Deterministic 64-bit generator (splitmix64 core).
 *
 * Standard-library distributions are implementation defined, so everything
 * randomized in this project draws through this class; identical seeds give
 * bit-identical streams on every platform. Child streams derived with
 * derive(i) are independent of the order in which they are consumed, which
 * keeps ensemble elements reproducible under any parallel schedule.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo,hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound).
  std::uint64_t uniform_index(std::uint64_t bound) {
    return next_u64() % bound;
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via the polar method.
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * f;
    have_cached_ = true;
    return u * f;
  }

  /// Standard complex normal: E|z|^2 = 1.
  std::complex<double> complex_gaussian() {
    return {gaussian() / std::sqrt(2.0), gaussian() / std::sqrt(2.0)};
  }

  /**
   * Number of successes in `trials` Bernoulli(p) draws.
   *
   * Exact summation up to 1<<14 trials; beyond that a moment-matched
   * Gaussian surrogate (rounded and clamped) stands in for the binomial,
   * the same noise model the learning oracles use for their subtree weight
   * estimates. Query accounting is done by the caller and is unaffected.
   */
  std::uint64_t binomial(std::uint64_t trials, double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return trials;
    if (trials <= (1ULL << 14)) {
      std::uint64_t hits = 0;
      for (std::uint64_t i = 0; i < trials; ++i) hits += bernoulli(p) ? 1 : 0;
      return hits;
    }
    const double mean = static_cast<double>(trials) * p;
    const double sd = std::sqrt(static_cast<double>(trials) * p * (1.0 - p));
    double draw = std::round(mean + sd * gaussian());
    if (draw < 0.0) draw = 0.0;
    const double cap = static_cast<double>(trials);
    if (draw > cap) draw = cap;
    return static_cast<std::uint64_t>(draw);
  }

  /// Independent child stream; derivation is pure in (seed, index).
  Rng derive(std::uint64_t index) const {
    Rng probe(state_ ^ (0xd1342543de82ef95ULL * (index + 1)));
    return Rng(probe.next_u64());
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace qbfa
