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

#include "qbfa/ensembles.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qbfa/influence.hpp"
#include "qbfa/rng.hpp"

namespace qbfa {
namespace {

Matrix complex_gaussian_matrix(std::int64_t rows, std::int64_t cols,
                               Rng& rng) {
  Matrix g(rows, cols);
  for (std::int64_t c = 0; c < cols; ++c) {
    for (std::int64_t r = 0; r < rows; ++r) {
      g(r, c) = rng.complex_gaussian();
    }
  }
  return g;
}

// Orthonormal columns spanning a Haar-distributed subspace.
Matrix haar_frame(std::int64_t dim, std::int64_t rank, Rng& rng) {
  const Matrix g = complex_gaussian_matrix(dim, rank, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, rank);
  // Fix the phase of each column so the distribution is exactly Haar.
  const Matrix r = qr.matrixQR().topRows(rank).triangularView<Eigen::Upper>();
  for (std::int64_t c = 0; c < rank; ++c) {
    const Complex d = r(c, c);
    if (std::abs(d) > 0) q.col(c) *= d / std::abs(d);
  }
  return q;
}

int resolve_rank(int n, int rank) {
  const std::int64_t dim = std::int64_t{1} << n;
  const std::int64_t r = rank < 0 ? dim / 2 : rank;
  if (r < 0 || r > dim) throw std::invalid_argument("rank out of [0, 2^n]");
  return static_cast<int>(r);
}

void check_site(int n, int site) {
  if (site < 0 || site >= n) {
    throw std::out_of_range("site index out of range");
  }
}

std::vector<std::uint64_t> low_degree_words(int n, int degree, bool diagonal) {
  std::vector<std::uint64_t> words;
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (index_weight(idx, n) > degree) continue;
    if (diagonal) {
      bool ok = true;
      for (int site = 0; site < n && ok; ++site) {
        const int d = index_digit(idx, n, site);
        ok = (d == 0 || d == 3);
      }
      if (!ok) continue;
    }
    words.push_back(idx);
  }
  return words;
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::dictator: return "dictator";
    case Family::parity: return "parity";
    case Family::majority: return "majority";
    case Family::tribes: return "tribes";
    case Family::classical_custom: return "classical_custom";
    case Family::random_qbf: return "random_qbf";
    case Family::random_hermitian: return "random_hermitian";
    case Family::random_projector: return "random_projector";
    case Family::evolved_pauli: return "evolved_pauli";
  }
  throw std::logic_error("unknown ensemble family");
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::dictator, Family::parity, Family::majority,
                   Family::tribes, Family::classical_custom,
                   Family::random_qbf, Family::random_hermitian,
                   Family::random_projector, Family::evolved_pauli}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown ensemble family: " + name);
}

FourierOperator classical_embed(std::span<const double> truth_table) {
  const auto size = truth_table.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("truth table size must be a power of two");
  }
  const int n = std::countr_zero(size);
  DenseOperator a = DenseOperator::zero(n);
  for (std::size_t x = 0; x < size; ++x) {
    const double v = truth_table[x];
    if (v != 1.0 && v != -1.0) {
      throw std::invalid_argument("truth table values must be +/-1");
    }
    a.mat(static_cast<std::int64_t>(x), static_cast<std::int64_t>(x)) = v;
  }
  return to_fourier(a);
}

std::vector<double> dictator_table(int n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> f(size);
  for (std::size_t x = 0; x < size; ++x) {
    // Site 0 is the most significant bit; bit set means x_1 = -1.
    f[x] = (x >> (n - 1)) & 1 ? -1.0 : 1.0;
  }
  return f;
}

std::vector<double> parity_table(int n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> f(size);
  for (std::size_t x = 0; x < size; ++x) {
    f[x] = (std::popcount(x) & 1) ? -1.0 : 1.0;
  }
  return f;
}

std::vector<double> majority_table(int n) {
  if (n % 2 == 0) throw std::invalid_argument("majority requires odd n");
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> f(size);
  for (std::size_t x = 0; x < size; ++x) {
    // Set bits vote -1.
    f[x] = 2 * std::popcount(x) < n ? 1.0 : -1.0;
  }
  return f;
}

std::vector<double> tribes_table(int n, int width) {
  if (width <= 0 || n % width != 0) {
    throw std::invalid_argument("tribes requires width dividing n");
  }
  const std::size_t size = std::size_t{1} << n;
  const int blocks = n / width;
  std::vector<double> f(size);
  for (std::size_t x = 0; x < size; ++x) {
    bool any_tribe = false;
    for (int b = 0; b < blocks && !any_tribe; ++b) {
      bool all_true = true;
      for (int j = 0; j < width; ++j) {
        const int site = b * width + j;
        if ((x >> (n - 1 - site)) & 1) {  // bit set = x_j = -1 = false
          all_true = false;
          break;
        }
      }
      any_tribe = all_true;
    }
    f[x] = any_tribe ? 1.0 : -1.0;
  }
  return f;
}

DenseOperator random_projector(int n, int rank, std::uint64_t seed) {
  const int r = resolve_rank(n, rank);
  DenseOperator p = DenseOperator::zero(n);
  if (r == 0) return p;
  Rng rng(seed);
  const Matrix q = haar_frame(p.dim(), r, rng);
  p.mat = q * q.adjoint();
  return p;
}

DenseOperator random_qbf(int n, int rank, std::uint64_t seed) {
  DenseOperator a = random_projector(n, rank, seed);
  a.mat = 2.0 * a.mat - Matrix::Identity(a.dim(), a.dim());
  return a;
}

DenseOperator random_hermitian(int n, std::uint64_t seed) {
  Rng rng(seed);
  DenseOperator a = DenseOperator::zero(n);
  const Matrix g = complex_gaussian_matrix(a.dim(), a.dim(), rng);
  a.mat = (g + g.adjoint()) / 2.0;
  return a;
}

DenseOperator random_low_degree(int n, int degree, std::uint64_t seed) {
  Rng rng(seed);
  FourierOperator f(n);
  for (std::uint64_t idx : low_degree_words(n, degree, false)) {
    f.set_coeff(idx, Complex{rng.gaussian(), 0.0});
  }
  DenseOperator a = to_dense(f);
  const double norm = operator_norm(a.mat);
  if (norm > 0) a.mat /= norm;
  return a;
}

DenseOperator random_low_degree_diagonal(int n, int degree,
                                         std::uint64_t seed) {
  Rng rng(seed);
  FourierOperator f(n);
  for (std::uint64_t idx : low_degree_words(n, degree, true)) {
    f.set_coeff(idx, Complex{rng.gaussian(), 0.0});
  }
  DenseOperator a = to_dense(f);
  const double norm = operator_norm(a.mat);
  if (norm > 0) a.mat /= norm;
  return a;
}

Matrix assemble_hamiltonian(int n, const std::vector<HamiltonianTerm>& terms) {
  const std::int64_t dim = std::int64_t{1} << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& term : terms) {
    const int k = static_cast<int>(term.sites.size());
    const std::int64_t term_dim = std::int64_t{1} << k;
    if (term.op.rows() != term_dim || term.op.cols() != term_dim) {
      throw std::invalid_argument("local term dimension mismatch");
    }
    if (operator_norm((term.op - term.op.adjoint()).eval()) >
        1e-12 * std::max(1.0, operator_norm(term.op))) {
      throw std::invalid_argument("local terms must be Hermitian");
    }
    for (int s : term.sites) check_site(n, s);
    // Scatter the local matrix into the full register.
    for (std::int64_t row = 0; row < dim; ++row) {
      std::int64_t local_row = 0;
      for (int b = 0; b < k; ++b) {
        local_row = (local_row << 1) | ((row >> (n - 1 - term.sites[b])) & 1);
      }
      for (std::int64_t local_col = 0; local_col < term_dim; ++local_col) {
        const Complex v = term.op(local_row, local_col);
        if (v == Complex{0, 0}) continue;
        std::int64_t col = row;
        for (int b = 0; b < k; ++b) {
          const std::int64_t bit = (local_col >> (k - 1 - b)) & 1;
          const std::int64_t mask = std::int64_t{1} << (n - 1 - term.sites[b]);
          col = (col & ~mask) | (bit ? mask : 0);
        }
        h(row, col) += v;
      }
    }
  }
  return h;
}

DenseOperator evolved_pauli(int n, const std::vector<HamiltonianTerm>& terms,
                            double t, int site, int pauli) {
  check_site(n, site);
  if (pauli < 0 || pauli > 3) {
    throw std::invalid_argument("pauli index out of {0,1,2,3}");
  }
  auto word = PauliString::identity(n).word();
  word[static_cast<size_t>(site)] = static_cast<std::uint8_t>(pauli);
  DenseOperator a = pauli_matrix(PauliString(word));
  if (t == 0.0 || terms.empty()) return a;

  const Matrix h = assemble_hamiltonian(n, terms);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases[i] = std::exp(Complex(0.0, t * es.eigenvalues()[i]));
  }
  const Matrix u =
      es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  a.mat = u * a.mat * u.adjoint();
  return a;
}

std::vector<HamiltonianTerm> chain_hamiltonian(int n, double coupling,
                                               double field) {
  std::vector<HamiltonianTerm> terms;
  Matrix zz = Matrix::Zero(4, 4);
  zz(0, 0) = 1;
  zz(1, 1) = -1;
  zz(2, 2) = -1;
  zz(3, 3) = 1;
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1;
  x(1, 0) = 1;
  for (int site = 0; site + 1 < n; ++site) {
    terms.push_back({{site, site + 1}, coupling * zz});
  }
  for (int site = 0; site < n; ++site) {
    terms.push_back({{site}, field * x});
  }
  return terms;
}

std::pair<double, double> commutator_influence_bound(const DenseOperator& a,
                                                     int site) {
  check_site(a.n, site);
  const double lhs = operator_norm(dense_derivation(a, site).mat);
  double rhs = 0.0;
  for (std::uint8_t k = 1; k <= 3; ++k) {
    auto word = PauliString::identity(a.n).word();
    word[static_cast<size_t>(site)] = k;
    const Matrix sigma = pauli_matrix(PauliString(word)).mat;
    rhs += operator_norm((a.mat * sigma - sigma * a.mat).eval());
  }
  rhs /= 4.0;
  return {lhs, rhs};
}

DenseOperator materialize(const EnsembleSpec& spec) {
  switch (spec.family) {
    case Family::dictator:
      return to_dense(classical_embed(dictator_table(spec.n)));
    case Family::parity:
      return to_dense(classical_embed(parity_table(spec.n)));
    case Family::majority:
      return to_dense(classical_embed(majority_table(spec.n)));
    case Family::tribes:
      return to_dense(classical_embed(tribes_table(spec.n, spec.width)));
    case Family::classical_custom:
      return to_dense(classical_embed(spec.truth_table));
    case Family::random_qbf:
      return random_qbf(spec.n, spec.rank, spec.seed);
    case Family::random_hermitian:
      return random_hermitian(spec.n, spec.seed);
    case Family::random_projector:
      return random_projector(spec.n, spec.rank, spec.seed);
    case Family::evolved_pauli:
      return evolved_pauli(spec.n, spec.hamiltonian, spec.time, spec.site,
                           spec.pauli);
  }
  throw std::logic_error("unknown ensemble family");
}

}  // namespace qbfa
