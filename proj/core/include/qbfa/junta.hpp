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

#include <set>

#include "qbfa/pauli.hpp"

namespace qbfa {

struct JuntaResult {
  std::set<int> discarded;   // T, the averaged-out sites
  FourierOperator junta;     // B = 2^-|T| tr_T(A) (x) 1_T
  double error_l2 = 0.0;     // ||A - B||_2, recomputed from scratch
  int k_actual = 0;          // |T^c|
  double k_bound = 0.0;      // the closed-form bound at this (Inf^1, Inf^2, eps)
  double eta = 0.0;          // influence threshold actually used
  double t = 0.0;            // smoothing time actually used
  bool degenerate_alpha = false;
};

/**
 * Closed-form junta size bound. With the default constants (48, 2) this is
 * the bound for arbitrary operators; `boolean_corollary` switches to the
 * (432, 6) constants of the quantum Boolean corollary. Branches on
 * inf2 >= 1; inf2 = 0 yields 0. Requires 0 < eps <= 2.
 */
double junta_bound(double inf1, double inf2, double eps,
                   bool boolean_corollary = false);

/**
 * Constructive extraction: discards T = {j : Inf^1_j(A) <= eta} with eta and
 * t chosen as in the proof (t = eps^2 / (16 Inf^2), alpha(t) = tanh(t); the
 * Inf^2 < 1 case runs on the rescaled operator). Certifies, by direct
 * recomputation, both ||A - B||_2 <= eps and k_actual <= junta_bound.
 */
JuntaResult friedgut_extract(const DenseOperator& a, double eps);

/**
 * Spectral sign rounding with sgn(0) = -1 (eigenvalues within 1e-12 of zero
 * count as zero). Output squares to the identity; the contraction property
 * ||B - sgn B||_2 <= ||B^2 - 1||_2 is verified on every call.
 */
DenseOperator sign_round(const DenseOperator& b);

struct BooleanJuntaResult {
  DenseOperator junta;      // C, quantum Boolean
  double error_l2 = 0.0;    // ||A - C||_2
  int k_actual = 0;
  double k_bound = 0.0;     // corollary constants at the caller's eps
  JuntaResult extraction;   // the eps/3 extraction underneath
};

/**
 * Quantum Boolean junta: extract at eps/3, then sign-round. Requires A to
 * pass is_quantum_boolean; guarantees ||A - C||_2 <= eps and C^2 = 1.
 */
BooleanJuntaResult boolean_junta(const DenseOperator& a, double eps,
                                 double tol = kDefaultSupportTol);

}  // namespace qbfa
