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

#include <bit>
#include <cmath>

#include "qbfa/ensembles.hpp"
#include "qbfa/influence.hpp"
#include "test_helpers.hpp"

using namespace qbfa;

namespace {

// Brute-force Fourier-Walsh transform over the hypercube (site 0 is the most
// significant index bit, set bit means x_j = -1).
double walsh_coefficient(const std::vector<double>& table, int n,
                         std::size_t subset_mask) {
  double sum = 0.0;
  for (std::size_t x = 0; x < table.size(); ++x) {
    const int sign = std::popcount(x & subset_mask) % 2 == 0 ? 1 : -1;
    sum += sign * table[x];
  }
  return sum / static_cast<double>(table.size());
}

}  // namespace

TEST_CASE("classical_embed: dictator and parity") {
  const FourierOperator dict = classical_embed(dictator_table(3));
  CHECK(std::abs(dict.coeff(PauliString::from_base4("300")) - Complex{1, 0}) <
        1e-13);
  CHECK(dict.stored_size() == 1);

  const FourierOperator par = classical_embed(parity_table(3));
  CHECK(std::abs(par.coeff(PauliString::from_base4("333")) - Complex{1, 0}) <
        1e-13);

  CHECK_THROWS_AS(classical_embed(std::vector<double>{1.0, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(classical_embed(std::vector<double>{1.0, -1.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("classical_embed majority matches the Walsh oracle") {
  const auto table = majority_table(3);
  const FourierOperator f = classical_embed(table);
  // Weight-one coefficients 1/2, the full product -1/2.
  for (const char* word : {"300", "030", "003"}) {
    CHECK(f.coeff(PauliString::from_base4(word)).real() ==
          doctest::Approx(0.5));
  }
  CHECK(f.coeff(PauliString::from_base4("333")).real() ==
        doctest::Approx(-0.5));

  // Every {0,3}-word coefficient equals the classical transform.
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    std::vector<std::uint8_t> word(3, 0);
    for (int site = 0; site < 3; ++site) {
      if ((mask >> (2 - site)) & 1) word[static_cast<size_t>(site)] = 3;
    }
    CHECK(f.coeff(PauliString(word)).real() ==
          doctest::Approx(walsh_coefficient(table, 3, mask)).epsilon(1e-12));
  }
}

TEST_CASE("classical embeddings are diagonal with {0,3} support") {
  const FourierOperator f = classical_embed(tribes_table(4, 2));
  f.for_each([&](std::uint64_t idx, Complex) {
    for (int site = 0; site < 4; ++site) {
      const int d = index_digit(idx, 4, site);
      CHECK((d == 0 || d == 3));
    }
  });
  const Matrix m = to_dense(f).mat;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r != c) CHECK(std::abs(m(r, c)) < 1e-13);
    }
  }
}

TEST_CASE("family guards: majority odd, tribes divisible") {
  CHECK_THROWS_AS(majority_table(4), std::invalid_argument);
  CHECK_THROWS_AS(tribes_table(5, 2), std::invalid_argument);
}

TEST_CASE("random_qbf: rank edge cases and balance") {
  CHECK((random_qbf(2, 4, 1).mat - Matrix::Identity(4, 4)).norm() <
        1e-13);
  CHECK((random_qbf(2, 0, 1).mat + Matrix::Identity(4, 4)).norm() <
        1e-13);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseOperator a = random_qbf(4, -1, 50 + seed);
    CHECK(is_quantum_boolean(a, 1e-10).ok);
    CHECK(std::abs(a.mat.trace()) < 1e-10);
  }
  CHECK_THROWS_AS(random_qbf(2, 5, 1), std::invalid_argument);
}

TEST_CASE("deterministic generation: identical seeds, identical bits") {
  const DenseOperator a = random_qbf(3, 4, 987654321);
  const DenseOperator b = random_qbf(3, 4, 987654321);
  CHECK(a.mat == b.mat);  // bit-for-bit

  const DenseOperator c = random_hermitian(3, 11);
  const DenseOperator d = random_hermitian(3, 11);
  CHECK(c.mat == d.mat);
  CHECK(random_hermitian(3, 12).mat != c.mat);
}

TEST_CASE("random projectors project") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int rank = 1 + static_cast<int>(seed);
    const DenseOperator p = random_projector(3, rank, 300 + seed);
    CHECK(operator_norm((p.mat * p.mat - p.mat).eval()) < 1e-12);
    CHECK(std::abs(p.mat.trace().real() - rank) < 1e-10);
  }
}

TEST_CASE("evolved_pauli: time zero and zero Hamiltonian") {
  const auto terms = chain_hamiltonian(3, 1.0, 0.7);
  const DenseOperator bare = evolved_pauli(3, terms, 0.0, 1, 3);
  CHECK((bare.mat - pauli_matrix(PauliString::from_base4("030")).mat).norm() <
        1e-13);

  const DenseOperator free = evolved_pauli(3, {}, 2.0, 1, 3);
  CHECK((free.mat - bare.mat).norm() < 1e-13);
}

TEST_CASE("evolved_pauli stays quantum Boolean and preserves variance") {
  const auto terms = chain_hamiltonian(4, 0.8, 0.5);
  const DenseOperator bare = evolved_pauli(4, terms, 0.0, 2, 1);
  const DenseOperator evolved = evolved_pauli(4, terms, 1.3, 2, 1);
  CHECK(is_quantum_boolean(evolved, 1e-9).ok);
  CHECK(variance(evolved) == doctest::Approx(variance(bare)).epsilon(1e-10));
}

TEST_CASE("evolved_pauli influence decays away from the source site") {
  // Observation, not a theorem at fixed n: report the profile and check the
  // far end of a short-time evolution carries less influence than the site.
  const auto terms = chain_hamiltonian(6, 1.0, 1.0);
  const DenseOperator evolved = evolved_pauli(6, terms, 0.4, 2, 3);
  const InfluenceProfile prof = profile(evolved);
  CHECK(prof.inf1[2] > prof.inf1[5]);
  CHECK(prof.inf1[2] > prof.inf1[0]);
}

TEST_CASE("assemble_hamiltonian rejects non-Hermitian terms") {
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(assemble_hamiltonian(2, {{{0}, bad}}),
                  std::invalid_argument);
}

TEST_CASE("assemble_hamiltonian scatters local terms correctly") {
  // ZZ on sites {0,1} of three qubits, against the Kronecker oracle.
  Matrix zz = Matrix::Zero(4, 4);
  zz(0, 0) = 1;
  zz(1, 1) = -1;
  zz(2, 2) = -1;
  zz(3, 3) = 1;
  const Matrix h = assemble_hamiltonian(3, {{{0, 1}, zz}});
  const Matrix expected = test_oracle::pauli_string_matrix(
      PauliString::from_base4("330"));
  CHECK((h - expected).cwiseAbs().maxCoeff() < 1e-13);

  // Single-site X at site 2.
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1;
  x(1, 0) = 1;
  const Matrix hx = assemble_hamiltonian(3, {{{2}, x}});
  CHECK((hx - test_oracle::pauli_string_matrix(PauliString::from_base4("001")))
            .cwiseAbs()
            .maxCoeff() < 1e-13);
}

TEST_CASE("commutator influence bound") {
  // A trivial at the site: both sides zero.
  const DenseOperator detached = pauli_matrix(PauliString::from_base4("03"));
  const auto [lhs0, rhs0] = commutator_influence_bound(detached, 0);
  CHECK(lhs0 == doctest::Approx(0.0));
  CHECK(rhs0 == doctest::Approx(0.0));

  // A = sigma_3 at the site: rhs = (1/4)(2 + 2 + 0) = 1 >= lhs = 1.
  const DenseOperator z = pauli_matrix(PauliString::from_base4("30"));
  const auto [lhs1, rhs1] = commutator_influence_bound(z, 0);
  CHECK(lhs1 == doctest::Approx(1.0));
  CHECK(rhs1 == doctest::Approx(1.0));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseOperator a = test_oracle::random_complex(3, 700 + seed);
    for (int site = 0; site < 3; ++site) {
      const auto [lhs, rhs] = commutator_influence_bound(a, site);
      CHECK(lhs <= rhs + 1e-10);
    }
  }
}

TEST_CASE("materialize follows the spec fields") {
  EnsembleSpec spec;
  spec.family = Family::parity;
  spec.n = 3;
  const DenseOperator par = materialize(spec);
  CHECK((par.mat - pauli_matrix(PauliString::from_base4("333")).mat).norm() <
        1e-13);

  spec.family = Family::random_qbf;
  spec.n = 3;
  spec.seed = 5;
  spec.rank = 4;
  CHECK(materialize(spec).mat == random_qbf(3, 4, 5).mat);
}
