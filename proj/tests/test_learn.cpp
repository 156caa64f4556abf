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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qbfa/ensembles.hpp"
#include "qbfa/learn.hpp"
#include "test_helpers.hpp"

using namespace qbfa;

namespace {

FourierOperator single_string(int n, const char* word, double value = 1.0) {
  FourierOperator f(n);
  f.set_coeff(PauliString::from_base4(word), Complex{value, 0.0});
  return f;
}

FourierOperator junta_on(int n, std::uint64_t seed,
                         const std::vector<int>& sites) {
  // A quantum Boolean function supported on `sites`, embedded in n qubits.
  const int k = static_cast<int>(sites.size());
  const DenseOperator small = random_qbf(k, -1, seed);
  const FourierOperator fs = to_fourier(small);
  FourierOperator f(n);
  fs.for_each([&](std::uint64_t idx, Complex v) {
    std::vector<std::uint8_t> word(static_cast<size_t>(n), 0);
    for (int b = 0; b < k; ++b) {
      word[static_cast<size_t>(sites[static_cast<size_t>(b)])] =
          static_cast<std::uint8_t>(index_digit(idx, k, b));
    }
    f.set_coeff(PauliString(word), v);
  });
  return f;
}

}  // namespace

TEST_CASE("oracle bits on deterministic coefficients") {
  QueryOracle plus(single_string(2, "12"), 7);
  QueryOracle minus(single_string(2, "12", -1.0), 7);
  const PauliString s = PauliString::from_base4("12");
  for (int i = 0; i < 50; ++i) {
    CHECK(plus.sample_coefficient_bit(s) == 0);
    CHECK(minus.sample_coefficient_bit(s) == 1);
  }
  CHECK(plus.query_count() == 50);
}

TEST_CASE("oracle rejects invalid hidden operators") {
  CHECK_THROWS_AS(QueryOracle(single_string(1, "3", 1.5), 1),
                  std::invalid_argument);
  FourierOperator complex_coeff(1);
  complex_coeff.set_coeff(PauliString::from_base4("3"), Complex{0.0, 0.4});
  CHECK_THROWS_AS(QueryOracle(std::move(complex_coeff), 1),
                  std::invalid_argument);
}

TEST_CASE("zero coefficient: empirical mean near zero") {
  QueryOracle oracle(single_string(2, "30", 0.7), 11);
  const double mean = oracle.estimate_mean(
      PauliString::from_base4("12").index(), 100000);
  CHECK(std::abs(mean) < 0.02);
  CHECK(oracle.query_count() == 100000);
}

TEST_CASE("unbiasedness within 3 sigma at fixed seed") {
  const double value = 0.37;
  QueryOracle oracle(single_string(1, "3", value), 13);
  const std::uint64_t shots = 200000;
  const double mean =
      oracle.estimate_mean(PauliString::from_base4("3").index(), shots);
  const double sigma = std::sqrt((1.0 - value * value) /
                                 static_cast<double>(shots));
  CHECK(std::abs(mean - value) < 3.0 * sigma);
}

TEST_CASE("estimate_coefficient: exact on unit coefficients") {
  QueryOracle oracle(single_string(2, "31"), 3);
  const double est = estimate_coefficient(
      oracle, PauliString::from_base4("31"), 0.2, 0.1);
  CHECK(est == doctest::Approx(1.0));
  // eta = 1 keeps the draw count small and the estimate trivially in range.
  QueryOracle cheap(single_string(1, "3"), 4);
  const double rough =
      estimate_coefficient(cheap, PauliString::from_base4("3"), 1.0, 0.5);
  CHECK(std::abs(rough) <= 1.0);
  CHECK(cheap.query_count() <= 4);
}

TEST_CASE("estimate_coefficient failure rate respects Hoeffding sizing") {
  const double value = 0.5;
  const double eta = 0.1;
  const double delta = 0.05;
  int failures = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    QueryOracle oracle(single_string(1, "3", value), 500 + trial);
    const double est = estimate_coefficient(
        oracle, PauliString::from_base4("3"), eta, delta);
    if (std::abs(est - value) > eta) ++failures;
  }
  // Binomial slack: 0.05 * 200 = 10 expected failures at most; allow 3 sigma.
  CHECK(failures <= 10 + 3 * std::sqrt(200 * 0.05 * 0.95));
}

TEST_CASE("goldreich_levin finds single strings") {
  QueryOracle oracle(single_string(3, "213"), 17);
  const auto list = goldreich_levin(oracle, 0.5, 0.1);
  REQUIRE(list.size() == 1);
  CHECK(list[0].to_base4() == "213");
  CHECK(oracle.query_count() > 0);
}

TEST_CASE("goldreich_levin finds a two-string superposition") {
  FourierOperator hidden(3);
  const double amp = 1.0 / std::sqrt(2.0);
  hidden.set_coeff(PauliString::from_base4("120"), Complex{amp, 0});
  hidden.set_coeff(PauliString::from_base4("003"), Complex{-amp, 0});
  QueryOracle oracle(std::move(hidden), 19);
  auto list = goldreich_levin(oracle, 0.5, 0.1);
  REQUIRE(list.size() == 2);
  std::vector<std::string> words;
  for (const auto& s : list) words.push_back(s.to_base4());
  std::sort(words.begin(), words.end());
  CHECK(words[0] == "003");
  CHECK(words[1] == "120");
}

TEST_CASE("goldreich_levin: small coefficients may yield an empty list") {
  FourierOperator hidden(3);
  // Sixteen strings of weight 1/16 each in L2: all |A_s| = 0.1 < gamma/4.
  Rng rng(23);
  for (int i = 0; i < 16; ++i) {
    std::vector<std::uint8_t> word(3, 0);
    do {
      for (auto& d : word) {
        d = static_cast<std::uint8_t>(rng.uniform_index(4));
      }
    } while (std::abs(hidden.coeff(PauliString(word))) > 0);
    hidden.set_coeff(PauliString(word), Complex{0.1, 0});
  }
  QueryOracle oracle(std::move(hidden), 29);
  const auto list = goldreich_levin(oracle, 0.9, 0.2);
  // Guarantee (2) is checkable regardless: everything listed is >= gamma/2.
  for (const auto& s : list) {
    CHECK(std::abs(oracle.hidden().coeff(s).real()) >= 0.45);
  }
  CHECK(list.size() <= 1);
}

TEST_CASE("learn_qbf recovers a dictator") {
  QueryOracle oracle(single_string(6, "300000"), 31);
  const LearnReport report = learn_qbf(oracle, 0.3, 0.1, 1);
  CHECK(report.success);
  CHECK(report.l2_error < 0.15);
  CHECK(report.recovered.coeff(PauliString::from_base4("300000")).real() >
        0.8);
  CHECK(report.queries_used == oracle.query_count());
}

TEST_CASE("learn_qbf on the identity") {
  QueryOracle oracle(single_string(4, "0000"), 37);
  const LearnReport report = learn_qbf(oracle, 0.4, 0.1, 0);
  CHECK(report.success);
  CHECK(report.recovered.coeff(0).real() == doctest::Approx(1.0));
  CHECK(report.l2_error < 1e-9);
}

TEST_CASE("learn_qbf tail bound holds on every success") {
  int successes = 0;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    QueryOracle oracle(junta_on(6, 600 + trial, {1, 4}), 700 + trial);
    const LearnReport report = learn_qbf(oracle, 0.3, 0.1, 2);
    if (!report.success) continue;
    ++successes;
    CHECK(report.params.at("true_tail") <=
          report.params.at("tail_bound") + 1e-12);
    CHECK(report.l2_error <= report.params.at("error_bound") + 1e-12);
  }
  CHECK(successes >= 18);  // delta = 0.1 with slack
}

TEST_CASE("low_degree_learn: exact recovery of a weight-one string") {
  QueryOracle oracle(single_string(4, "0300"), 41);
  const LearnReport report = low_degree_learn(oracle, 1, 0.3, 0.1, 1.1);
  CHECK(report.success);
  CHECK(report.l2_error < 0.05);
  CHECK(report.recovered.coeff(PauliString::from_base4("0300")).real() > 0.9);

  // Query accounting: exactly N per word of weight <= 1.
  const double n_formula = std::ceil(
      std::exp(8.0) * 1.0 / std::pow(0.3, 2) * std::pow(1.1, 2) *
      std::log(4.0 / 0.1));
  const double words = 1 + 3 * 4;  // identity + 3 paulis x 4 sites
  CHECK(static_cast<double>(report.queries_used) ==
        doctest::Approx(n_formula * words));
}

TEST_CASE("low_degree_learn rejects over-degree hidden operators") {
  QueryOracle oracle(single_string(3, "333"), 43);
  CHECK_THROWS_AS(low_degree_learn(oracle, 2, 0.3, 0.1, 1.1),
                  std::invalid_argument);
}

TEST_CASE("low_degree_learn degree zero") {
  QueryOracle oracle(single_string(3, "000", 0.4), 47);
  const LearnReport report = low_degree_learn(oracle, 0, 0.2, 0.1, 1.1);
  CHECK(report.success);
  CHECK(report.l2_error * report.l2_error <= 0.2);
}

TEST_CASE("bh_ratio closed forms") {
  CHECK(bh_ratio(single_string(3, "120"), 2) == doctest::Approx(1.0));

  // (sigma_3 x 1 + 1 x sigma_3)/2 at d = 1: eigenvalues {1, 0, 0, -1}.
  FourierOperator f(2);
  f.set_coeff(PauliString::from_base4("30"), Complex{0.5, 0});
  f.set_coeff(PauliString::from_base4("03"), Complex{0.5, 0});
  CHECK(bh_ratio(f, 1) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(bh_ratio(single_string(3, "333"), 2),
                  std::invalid_argument);
}

TEST_CASE("bh_ratio over random low-degree ensembles") {
  double max_ratio = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DenseOperator a = random_low_degree(4, 2, 800 + seed);
    max_ratio = std::max(max_ratio, bh_ratio(to_fourier(a), 2));
  }
  CHECK(max_ratio > 0.5);
  CHECK(std::isfinite(max_ratio));
}

TEST_CASE("query accounting is monotone") {
  QueryOracle oracle(single_string(2, "31"), 53);
  const auto q0 = oracle.query_count();
  oracle.sample_coefficient_bit(PauliString::from_base4("31"));
  const auto q1 = oracle.query_count();
  oracle.estimate_mean(PauliString::from_base4("31").index(), 10);
  const auto q2 = oracle.query_count();
  oracle.estimate_subtree_weight(0, 0, 25);
  const auto q3 = oracle.query_count();
  CHECK(q1 == q0 + 1);
  CHECK(q2 == q1 + 10);
  CHECK(q3 == q2 + 25);
}
