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

#include <vector>

#include "qbfa/pauli.hpp"

namespace qbfa {

/**
 * The derivation at `site`: keeps exactly the coefficients with a non-trivial
 * Pauli at that site. Idempotent, and commutes with every other d_i.
 */
FourierOperator d_j(const FourierOperator& f, int site);

/**
 * Same map computed on the dense side through the partial-trace identity
 * d_j(A) = A - (1/4) sum_k sigma_k^(j) A sigma_k^(j). Used as an independent
 * cross-check of the coefficient filter.
 */
DenseOperator dense_derivation(const DenseOperator& a, int site);

/**
 * Inf^p_j(A) = ||d_j A||_p^p with the normalized Schatten norm. p = 2 is
 * evaluated exactly on the Fourier side; every other p goes through a dense
 * spectral decomposition of d_j A.
 */
double influence(const FourierOperator& f, int site, double p);
inline double influence(const DenseOperator& a, int site, double p) {
  return influence(to_fourier(a), site, p);
}

struct InfluenceProfile {
  int n = 0;
  std::vector<double> inf1;
  std::vector<double> inf2;
  double total1 = 0.0;
  double total2 = 0.0;
  int argmax1 = 0;  // ties resolved to the lowest site
};

InfluenceProfile profile(const FourierOperator& f);
inline InfluenceProfile profile(const DenseOperator& a) {
  return profile(to_fourier(a));
}

}  // namespace qbfa
