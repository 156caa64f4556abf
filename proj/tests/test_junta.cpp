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

#include <cmath>

#include "qbfa/ensembles.hpp"
#include "qbfa/influence.hpp"
#include "qbfa/junta.hpp"
#include "qbfa/semigroup.hpp"
#include "test_helpers.hpp"

using namespace qbfa;

TEST_CASE("junta_bound closed forms") {
  CHECK(junta_bound(1.0, 1.0, 2.0) == doctest::Approx(1.0));
  CHECK(junta_bound(5.0, 0.0, 1.0) == doctest::Approx(0.0));
  CHECK(junta_bound(2.0, 1.0, 1.0) ==
        doctest::Approx(4.0 * std::exp(48.0 * std::log(2.0))).epsilon(1e-12));
  CHECK_THROWS_AS(junta_bound(1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(junta_bound(1.0, 1.0, 2.5), std::invalid_argument);
}

TEST_CASE("corollary constants equal the theorem at eps/3") {
  for (double inf1 : {0.5, 1.0, 3.0}) {
    for (double inf2 : {0.25, 1.0, 2.0}) {
      for (double eps : {0.5, 1.0, 2.0}) {
        const double corollary = junta_bound(inf1, inf2, eps, true);
        const double rescaled = junta_bound(inf1, inf2, eps / 3.0, false);
        if (std::isinf(corollary) || std::isinf(rescaled)) {
          CHECK(std::isinf(corollary));
          CHECK(std::isinf(rescaled));
        } else {
          CHECK(corollary == doctest::Approx(rescaled).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("friedgut_extract on a dictator keeps exactly one site") {
  const int n = 5;
  const DenseOperator a = to_dense(classical_embed(dictator_table(n)));
  const JuntaResult r = friedgut_extract(a, 2.0);
  CHECK(r.k_actual == 1);
  CHECK(r.error_l2 == doctest::Approx(0.0));
  CHECK(r.discarded == std::set<int>{1, 2, 3, 4});
  CHECK(r.k_bound == doctest::Approx(1.0));  // Inf^1 = Inf^2 = 1, eps = 2
  CHECK(r.k_actual <= r.k_bound + 1e-12);
}

TEST_CASE("friedgut_extract trivial branch") {
  const JuntaResult r = friedgut_extract(DenseOperator::identity(4), 1.0);
  CHECK(r.error_l2 == doctest::Approx(0.0));
  CHECK(r.k_actual == 0);
}

TEST_CASE("friedgut_extract certifies both guarantees on ensembles") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const DenseOperator a = random_qbf(n, -1, 40 + seed);
    for (double eps : {0.25, 0.5, 1.0, 2.0}) {
      const JuntaResult r = friedgut_extract(a, eps);
      CHECK(r.error_l2 <= eps + 1e-10);
      CHECK(static_cast<double>(r.k_actual) <= r.k_bound + 1e-9);
      // Fresh recomputation of the reported error.
      FourierOperator gap = to_fourier(a);
      gap -= r.junta;
      CHECK(std::abs(std::sqrt(gap.two_norm_squared()) - r.error_l2) < 1e-10);
      CHECK(support_of(r.junta).size() <= static_cast<size_t>(r.k_actual));
    }
  }
}

TEST_CASE("friedgut_extract on an operator with one dominant site") {
  // 0.95 sigma_3^(1) + small weight elsewhere.
  FourierOperator f(5);
  f.set_coeff(PauliString::from_base4("30000"), Complex{0.95, 0});
  f.set_coeff(PauliString::from_base4("03000"), Complex{0.05, 0});
  f.set_coeff(PauliString::from_base4("00031"), Complex{0.05, 0});
  const DenseOperator a = to_dense(f);
  const JuntaResult r = friedgut_extract(a, 0.5);
  CHECK(r.error_l2 <= 0.5 + 1e-12);
  CHECK(static_cast<double>(r.k_actual) <= r.k_bound + 1e-9);
  CHECK(r.junta.coeff(PauliString::from_base4("30000")).real() ==
        doctest::Approx(0.95));
}

TEST_CASE("smoothing lemma with low-influence averaging sets") {
  // || P_t A - avg_T P_t A ||_2^2 <= (eta Inf^1 A)^{alpha(t)} (Inf^2 A)^{1-alpha(t)}
  // whenever T only contains sites with Inf^1_j <= eta.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseOperator a = random_qbf(4, -1, 800 + seed);
    const InfluenceProfile prof = profile(a);
    Rng rng(900 + seed);
    const double eta = rng.uniform(0.05, 0.8);
    const double t = rng.uniform(0.05, 1.5);
    std::set<int> sites;
    for (int j = 0; j < 4; ++j) {
      if (prof.inf1[static_cast<size_t>(j)] <= eta) sites.insert(j);
    }
    const FourierOperator evolved = apply_semigroup(to_fourier(a), t);
    FourierOperator gap = evolved;
    gap -= partial_average(evolved, sites);
    const double alpha = std::tanh(t);
    const double cap = std::pow(eta * prof.total1, alpha) *
                       std::pow(prof.total2, 1.0 - alpha);
    CHECK(gap.two_norm_squared() <= cap * (1 + 1e-9) + 1e-12);
  }
}

TEST_CASE("sign_round closed forms") {
  DenseOperator half = pauli_matrix(PauliString::from_base4("3"));
  half.mat *= 0.5;
  const DenseOperator rounded = sign_round(half);
  CHECK((rounded.mat - pauli_matrix(PauliString::from_base4("3")).mat)
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  // sgn(0) = -1.
  const DenseOperator zero = sign_round(DenseOperator::zero(2));
  CHECK((zero.mat + Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);

  DenseOperator diag = DenseOperator::zero(2);
  diag.mat(0, 0) = 1.2;
  diag.mat(1, 1) = -0.3;
  diag.mat(2, 2) = 0.9;
  diag.mat(3, 3) = -1.1;
  const DenseOperator s = sign_round(diag);
  CHECK(s.mat(0, 0).real() == doctest::Approx(1.0));
  CHECK(s.mat(1, 1).real() == doctest::Approx(-1.0));
  CHECK(s.mat(2, 2).real() == doctest::Approx(1.0));
  CHECK(s.mat(3, 3).real() == doctest::Approx(-1.0));

  DenseOperator skew = pauli_matrix(PauliString::from_base4("2"));
  skew.mat *= Complex{0, 1};  // i sigma_2 is anti-Hermitian
  CHECK_THROWS_AS(sign_round(skew), std::invalid_argument);
}

TEST_CASE("sign_round is idempotent and produces quantum Booleans") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const DenseOperator a = test_oracle::random_hermitian(3, 100 + seed);
    const DenseOperator s = sign_round(a);
    CHECK(is_quantum_boolean(s, 1e-10).ok);
    const DenseOperator twice = sign_round(s);
    CHECK((twice.mat - s.mat).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("boolean_junta: dictators are already juntas") {
  const DenseOperator a = pauli_matrix(PauliString::from_base4("10"));
  const BooleanJuntaResult r = boolean_junta(a, 1.0);
  CHECK((r.junta.mat - a.mat).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(r.error_l2 == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(r.k_actual == 1);
}

TEST_CASE("boolean_junta on tribes and random reflections") {
  const DenseOperator tribes = to_dense(classical_embed(tribes_table(6, 2)));
  const BooleanJuntaResult r = boolean_junta(tribes, 1.0);
  CHECK(r.error_l2 <= 1.0 + 1e-10);
  CHECK(is_quantum_boolean(r.junta, 1e-10).ok);
  CHECK(static_cast<double>(r.k_actual) <= r.k_bound + 1e-9);
  // Support of the rounded junta stays inside the kept sites.
  const auto supp = support_of(to_fourier(r.junta));
  for (int site : r.extraction.discarded) CHECK(supp.count(site) == 0);

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const DenseOperator a = random_qbf(4, 8, 200 + seed);
    const BooleanJuntaResult br = boolean_junta(a, 1.5);
    CHECK(br.error_l2 <= 1.5 + 1e-10);
    CHECK(is_quantum_boolean(br.junta, 1e-10).ok);
  }

  CHECK_THROWS_AS(boolean_junta(DenseOperator::zero(2), 1.0),
                  std::invalid_argument);
}
