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
#include <limits>

#include "qbfa/pauli.hpp"
#include "test_helpers.hpp"

using namespace qbfa;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("pauli_matrix matches the explicit matrices") {
  const DenseOperator x = pauli_matrix(PauliString::from_base4("1"));
  CHECK(x.mat(0, 0) == Complex{0, 0});
  CHECK(x.mat(0, 1) == Complex{1, 0});
  CHECK(x.mat(1, 0) == Complex{1, 0});
  CHECK(x.mat(1, 1) == Complex{0, 0});

  const DenseOperator id2 = pauli_matrix(PauliString::from_base4("00"));
  CHECK((id2.mat - Matrix::Identity(4, 4)).norm() == doctest::Approx(0.0));

  // Kronecker definition, against the independent product oracle.
  for (const char* word : {"31", "12", "213", "0231"}) {
    const PauliString s = PauliString::from_base4(word);
    const Matrix expected = test_oracle::pauli_string_matrix(s);
    CHECK((pauli_matrix(s).mat - expected).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("pauli matrices are Hermitian and unitary") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(4));
    std::vector<std::uint8_t> word(n);
    for (auto& d : word) d = static_cast<std::uint8_t>(rng.uniform_index(4));
    const Matrix m = pauli_matrix(PauliString(word)).mat;
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((m * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <
          1e-14);
  }
}

TEST_CASE("to_fourier on closed forms") {
  // |0><0| = (1 + sigma_3)/2.
  DenseOperator ket0 = DenseOperator::zero(1);
  ket0.mat(0, 0) = 1.0;
  const FourierOperator f = to_fourier(ket0);
  CHECK(f.coeff(PauliString::from_base4("0")).real() == doctest::Approx(0.5));
  CHECK(f.coeff(PauliString::from_base4("3")).real() == doctest::Approx(0.5));
  CHECK(f.coeff(PauliString::from_base4("1")) == Complex{0, 0});

  const FourierOperator g =
      to_fourier(pauli_matrix(PauliString::from_base4("12")));
  CHECK(std::abs(g.coeff(PauliString::from_base4("12")) - Complex{1, 0}) <
        1e-14);
  CHECK(g.stored_size() == 1);
}

TEST_CASE("to_fourier agrees with the direct trace oracle") {
  const DenseOperator a = test_oracle::random_hermitian(4, 11);
  const FourierOperator f = to_fourier(a);
  CHECK(f.has_real_coefficients(1e-12));
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto idx = rng.uniform_index(std::uint64_t{1} << 8);
    const PauliString s = PauliString::from_index(idx, 4);
    const Complex direct =
        (test_oracle::pauli_string_matrix(s) * a.mat).trace() / 16.0;
    CHECK(std::abs(f.coeff(idx) - direct) < 1e-12);
  }
}

TEST_CASE("to_dense closed forms and round trips") {
  FourierOperator one(1);
  one.set_coeff(PauliString::from_base4("0"), Complex{1, 0});
  CHECK((to_dense(one).mat - Matrix::Identity(2, 2)).norm() < 1e-14);

  FourierOperator proj(1);
  proj.set_coeff(PauliString::from_base4("0"), Complex{0.5, 0});
  proj.set_coeff(PauliString::from_base4("3"), Complex{0.5, 0});
  const Matrix m = to_dense(proj).mat;
  CHECK(m(0, 0).real() == doctest::Approx(1.0));
  CHECK(m(1, 1).real() == doctest::Approx(0.0));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DenseOperator a = test_oracle::random_complex(3, 1000 + seed);
    const DenseOperator back = to_dense(to_fourier(a));
    CHECK((back.mat - a.mat).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("schatten norms on closed forms") {
  const DenseOperator id = DenseOperator::identity(3);
  for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
    CHECK(schatten(id, p) == doctest::Approx(1.0));
  }

  DenseOperator a = DenseOperator::zero(1);
  a.mat(0, 0) = 2.0;
  CHECK(schatten(a, 1.0) == doctest::Approx(1.0));
  CHECK(schatten(a, 2.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(schatten(a, kInf) == doctest::Approx(2.0));

  CHECK_THROWS_AS(schatten_norm(a, 0.5), std::invalid_argument);
}

TEST_CASE("quantum Boolean operators have unit norms for all p") {
  // A^2 = 1 forces |A| = 1, hence ||A||_p = 1 for every p.
  DenseOperator a = pauli_matrix(PauliString::from_base4("31"));
  for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
    CHECK(schatten(a, p) == doctest::Approx(1.0));
  }
}

TEST_CASE("normalized norms satisfy the Hoelder ladder") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const DenseOperator a = test_oracle::random_complex(3, 500 + seed);
    const double n1 = schatten(a, 1.0);
    const double n2 = schatten(a, 2.0);
    const double ninf = schatten(a, kInf);
    CHECK(n1 <= n2 * (1 + 1e-12));
    CHECK(n2 <= ninf * (1 + 1e-12));
  }
}

TEST_CASE("inner product: orthonormality and cross paths") {
  const PauliString s = PauliString::from_base4("123");
  const PauliString u = PauliString::from_base4("120");
  CHECK(std::abs(inner(pauli_matrix(s), pauli_matrix(s)) - Complex{1, 0}) <
        1e-13);
  CHECK(std::abs(inner(pauli_matrix(s), pauli_matrix(u))) < 1e-13);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseOperator a = test_oracle::random_complex(3, 900 + seed);
    const DenseOperator b = test_oracle::random_complex(3, 950 + seed);
    // <A, A> = ||A||_2^2.
    CHECK(inner(a, a).real() ==
          doctest::Approx(std::pow(schatten(a, 2.0), 2)).epsilon(1e-10));
    // Coefficient-side evaluation of the same pairing.
    const FourierOperator fa = to_fourier(a);
    const FourierOperator fb = to_fourier(b);
    Complex coeff_side{0, 0};
    fa.for_each([&](std::uint64_t idx, Complex v) {
      coeff_side += std::conj(v) * fb.coeff(idx);
    });
    CHECK(std::abs(coeff_side - inner(a, b)) < 1e-12);
  }
  DenseOperator mismatched = DenseOperator::identity(2);
  CHECK_THROWS_AS(inner(DenseOperator::identity(1), mismatched),
                  std::invalid_argument);
}

TEST_CASE("variance closed forms and Parseval") {
  CHECK(variance(DenseOperator::identity(4)) == doctest::Approx(0.0));
  CHECK(variance(pauli_matrix(PauliString::from_base4("30"))) ==
        doctest::Approx(1.0));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DenseOperator a = test_oracle::random_complex(3, 300 + seed);
    const FourierOperator f = to_fourier(a);
    const double parseval_gap =
        std::abs(variance(f) + std::norm(f.mean_coefficient()) -
                 std::pow(schatten(a, 2.0), 2));
    CHECK(parseval_gap < 1e-12 * std::max(1.0, f.two_norm_squared()));
    CHECK(variance(a) == doctest::Approx(variance(f)).epsilon(1e-12));
  }
}

TEST_CASE("is_quantum_boolean") {
  CHECK(is_quantum_boolean(pauli_matrix(PauliString::from_base4("31"))).ok);

  DenseOperator half = pauli_matrix(PauliString::from_base4("3"));
  half.mat *= 0.5;
  const auto check = is_quantum_boolean(half);
  CHECK_FALSE(check.ok);
  CHECK(check.square_residual > 0.5);

  // 2P - 1 for any projector P.
  DenseOperator p = DenseOperator::zero(2);
  p.mat(0, 0) = 1.0;
  p.mat(3, 3) = 1.0;
  DenseOperator qbf = p;
  qbf.mat = 2.0 * p.mat - Matrix::Identity(4, 4);
  CHECK(is_quantum_boolean(qbf).ok);
}

TEST_CASE("support_of") {
  CHECK(support_of(to_fourier(pauli_matrix(PauliString::from_base4("300")))) ==
        std::set<int>{0});
  CHECK(support_of(to_fourier(DenseOperator::identity(3))).empty());
  CHECK(support_of(to_fourier(pauli_matrix(PauliString::from_base4("3333")))) ==
        std::set<int>{0, 1, 2, 3});
}

TEST_CASE("partial_average closed forms") {
  const FourierOperator zz = to_fourier(pauli_matrix(PauliString::from_base4("33")));
  CHECK(partial_average(zz, {1}).two_norm_squared() == doctest::Approx(0.0));

  const FourierOperator z1 = to_fourier(pauli_matrix(PauliString::from_base4("30")));
  const FourierOperator kept = partial_average(z1, {1});
  CHECK(std::abs(kept.coeff(PauliString::from_base4("30")) - Complex{1, 0}) <
        1e-14);

  const DenseOperator a = test_oracle::random_complex(3, 77);
  const FourierOperator f = to_fourier(a);
  const FourierOperator all = partial_average(f, {0, 1, 2});
  CHECK(all.stored_size() <= 1);
  CHECK(std::abs(all.coeff(0) - f.coeff(0)) < 1e-14);
}

TEST_CASE("partial_average is idempotent and splits over disjoint sets") {
  const DenseOperator a = test_oracle::random_complex(4, 42);
  const FourierOperator f = to_fourier(a);
  const FourierOperator once = partial_average(f, {1, 3});
  const FourierOperator twice = partial_average(once, {1, 3});
  FourierOperator gap = once;
  gap -= twice;
  CHECK(gap.two_norm_squared() < 1e-24);

  const FourierOperator split =
      partial_average(partial_average(f, {1}), {3});
  gap = once;
  gap -= split;
  CHECK(gap.two_norm_squared() < 1e-24);

  // Contraction in ||.||_2 and ||.||_inf.
  CHECK(std::sqrt(once.two_norm_squared()) <=
        std::sqrt(f.two_norm_squared()) + 1e-12);
  CHECK(operator_norm(to_dense(once).mat) <=
        operator_norm(a.mat) + 1e-10);

  CHECK_THROWS_AS(partial_average(f, {9}), std::invalid_argument);
}

TEST_CASE("PauliString parsing and packing") {
  const PauliString s = PauliString::from_base4("0312");
  CHECK(s.size() == 4);
  CHECK(s.weight() == 3);
  CHECK(s.support() == std::vector<int>{1, 2, 3});
  CHECK(PauliString::from_index(s.index(), 4) == s);
  CHECK(s.to_base4() == "0312");
  CHECK_THROWS_AS(PauliString::from_base4("0x1"), std::invalid_argument);
}
