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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbfa/pauli.hpp"
#include "qbfa/rng.hpp"

namespace qbfa {

/**
 * Classically simulated oracle access to a hidden operator with real
 * coefficients bounded by 1 in modulus.
 *
 * Coefficient queries reproduce the statistics of the measurement circuit: a
 * bit that is 0 with probability 1/2 + A_s/2, so 1 - 2 bit is unbiased for
 * A_s. Subtree weights are computed exactly from the hidden coefficients and
 * corrupted with Gaussian noise of variance 1/shots. Every sampling call
 * charges its declared cost to the monotone query counter.
 */
class QueryOracle {
 public:
  QueryOracle(FourierOperator hidden, std::uint64_t seed);

  int n() const { return hidden_.n(); }
  std::uint64_t query_count() const { return queries_; }

  /// One query; bit 0 carries probability 1/2 + A_s/2.
  int sample_coefficient_bit(const PauliString& s);

  /// Mean of `shots` draws of 1 - 2 bit; costs `shots` queries.
  double estimate_mean(std::uint64_t word, std::uint64_t shots);

  /**
   * Noisy W(prefix) = sum over words extending `prefix` of |A_s|^2,
   * clipped to [0, max(1, ||A||_2^2)]; costs `shots` queries.
   */
  double estimate_subtree_weight(std::uint64_t prefix, int prefix_len,
                                 std::uint64_t shots);

  /// Simulation-side access for checking guarantees; not an oracle query.
  const FourierOperator& hidden() const { return hidden_; }

 private:
  FourierOperator hidden_;
  Rng rng_;
  std::uint64_t queries_ = 0;
  double weight_cap_ = 1.0;
};

struct LearnReport {
  FourierOperator recovered;
  double l2_error = 0.0;  // ||recovered - hidden||_2, simulation-side
  std::uint64_t queries_used = 0;
  bool success = false;
  std::map<std::string, double> params;
};

/**
 * Hoeffding-sized estimate of A_s to within +/-eta with probability
 * 1 - delta: the mean of ceil((2/eta^2) log(2/delta)) coefficient bits.
 */
double estimate_coefficient(QueryOracle& oracle, const PauliString& s,
                            double eta, double delta);

/**
 * Prefix-tree search over base-4 words keeping subtrees of estimated weight
 * >= gamma^2/2. With probability 1 - delta the returned list L satisfies
 * (1) |A_s| >= gamma implies s in L, and (2) |A_s| >= gamma/2 for s in L.
 */
std::vector<PauliString> goldreich_levin(QueryOracle& oracle, double gamma,
                                         double delta);

/**
 * Goldreich-Levin at gamma = eps 2^{-k_hint} followed by coefficient
 * estimation at eta = eps/(2 sqrt|L|); the delta budget is split evenly
 * between the two phases. Success verifies both list guarantees plus the
 * (eps^2 + 4^k gamma^2)^{1/2} tail bound against the hidden coefficients.
 */
LearnReport learn_qbf(QueryOracle& oracle, double eps, double delta,
                      int k_hint);

/**
 * Estimates every coefficient of weight <= degree with
 * N = ceil(e^8 d^2 / eps^{d+1} C_d^{2d} log(n/delta)) draws, then keeps
 * estimates above the threshold a = b(1 + sqrt(d+1)) with
 * b = (e^-5 eps^{d+1} / (d C_d^{2d}))^{1/2}. Success is ||H - A||_2^2 <= eps.
 */
LearnReport low_degree_learn(QueryOracle& oracle, int degree, double eps,
                             double delta, double c_d);

/**
 * (sum_{|s| <= d} |A_s|^{2d/(d+1)})^{(d+1)/2d} / ||A||; measured, never
 * asserted against any conjectured C_d. Throws if the degree exceeds d.
 */
double bh_ratio(const FourierOperator& f, int degree);

}  // namespace qbfa
