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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qbfa/pauli.hpp"

namespace qbfa {

enum class Family {
  dictator,
  parity,
  majority,
  tribes,
  classical_custom,
  random_qbf,
  random_hermitian,
  random_projector,
  evolved_pauli,
};

std::string family_name(Family family);
Family family_from_name(const std::string& name);

/// A Hermitian term acting on an ordered list of sites.
struct HamiltonianTerm {
  std::vector<int> sites;
  Matrix op;  // 2^|sites| x 2^|sites|
};

struct EnsembleSpec {
  Family family = Family::random_qbf;
  int n = 1;
  std::uint64_t seed = 0;
  int rank = -1;   // projector rank; -1 means 2^{n-1}
  int width = 2;   // tribes block width
  double time = 0.0;
  int site = 0;
  int pauli = 3;
  std::vector<HamiltonianTerm> hamiltonian;
  std::vector<double> truth_table;  // classical_custom
};

/// Same (spec, seed) always materializes the identical operator.
DenseOperator materialize(const EnsembleSpec& spec);

/**
 * Diagonal embedding of a classical +/-1 truth table (index bit b_j = 1
 * means x_j = -1). Fourier support lands on words over {0,3} and equals the
 * Fourier-Walsh coefficients of the embedded function.
 */
FourierOperator classical_embed(std::span<const double> truth_table);

std::vector<double> dictator_table(int n);
std::vector<double> parity_table(int n);
std::vector<double> majority_table(int n);             // n odd
std::vector<double> tribes_table(int n, int width);    // width | n

/// A = 2P - 1 for a Haar-random rank-`rank` projector P.
DenseOperator random_qbf(int n, int rank, std::uint64_t seed);

/// GUE-style Hermitian matrix, entries O(1).
DenseOperator random_hermitian(int n, std::uint64_t seed);

/// Haar-random rank-`rank` projector.
DenseOperator random_projector(int n, int rank, std::uint64_t seed);

/// Random real coefficients on words of weight <= degree, ||A|| scaled to 1.
DenseOperator random_low_degree(int n, int degree, std::uint64_t seed);
/// Same restricted to diagonal words ({0,3} alphabet).
DenseOperator random_low_degree_diagonal(int n, int degree,
                                         std::uint64_t seed);

/// e^{itH} sigma_pauli^(site) e^{-itH}; H assembled from Hermitian terms.
DenseOperator evolved_pauli(int n, const std::vector<HamiltonianTerm>& terms,
                            double t, int site, int pauli);

/// Dense Hamiltonian from local terms.
Matrix assemble_hamiltonian(int n, const std::vector<HamiltonianTerm>& terms);

/// Nearest-neighbour chain: coupling * ZZ on each edge + field * X per site.
std::vector<HamiltonianTerm> chain_hamiltonian(int n, double coupling,
                                               double field);

/**
 * lhs = ||d_j A||_inf and rhs = (1/4) sum over the three non-trivial Paulis
 * at `site` of ||[A, sigma]||_inf; lhs <= rhs always.
 */
std::pair<double, double> commutator_influence_bound(const DenseOperator& a,
                                                     int site);

}  // namespace qbfa
