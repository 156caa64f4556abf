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

#include <string>

#include "qbfa/pauli.hpp"

namespace qbfa {

/**
 * Depolarizing semigroup P_t: multiplies each coefficient by
 * e^{-t |supp(s)|}. Exact (no matrix exponential); t >= 0.
 */
FourierOperator apply_semigroup(const FourierOperator& f, double t);

/// Generator L = sum_j d_j: multiplies each coefficient by |supp(s)|.
FourierOperator generator(const FourierOperator& f);

/// Carre du champ: 2 Gamma(A) = L(A*)A + A* L(A) - L(A*A). Hermitian, PSD.
DenseOperator carre_du_champ(const DenseOperator& a);

/// Dense evaluation of L through the Fourier side.
DenseOperator apply_generator_dense(const DenseOperator& a);
DenseOperator apply_semigroup_dense(const DenseOperator& a, double t);

/**
 * P_t applied as the site-wise convex combination on the matrix itself,
 * independent of the Fourier multipliers. Cross-check path only.
 */
DenseOperator apply_semigroup_sitewise(const DenseOperator& a, double t);

struct SemigroupCheckReport {
  std::string name;
  double t = 0.0;
  double lhs = 0.0;  // scalar side, or most positive eigenvalue of LHS-RHS
  double rhs = 0.0;
  bool satisfied = false;
  double slack = 0.0;  // rhs - lhs, or min eigenvalue of RHS - LHS
};

inline constexpr double kPsdCheckTol = 1e-9;

/// ||P_t A||_2 <= ||A||_{p(t)} with p(t) = 1 + e^{-2t}.
SemigroupCheckReport check_hypercontractivity(const DenseOperator& a, double t,
                                              double tol = kPsdCheckTol);

/// Gamma(P_t A) <= e^{-t} P_t Gamma(A) as a PSD ordering.
SemigroupCheckReport check_gradient_estimate(const DenseOperator& a, double t,
                                             double tol = kPsdCheckTol);

/**
 * sum_j (d_j P_t A)* (d_j P_t A) <= ||A||^2/(e^t - 1), plus the per-site
 * corollary ||d_j P_t A|| <= ||A||/sqrt(e^t - 1). Requires t > 0.
 */
SemigroupCheckReport check_djPt_bound(const DenseOperator& a, double t,
                                      double tol = kPsdCheckTol);

/// d_j P_t = P_t d_j; residual checked through an independent dense path.
SemigroupCheckReport check_intertwining(const DenseOperator& a, double t,
                                        int site, double tol = 1e-14);

/// ||A - P_t A||_2^2 <= t Inf^2(A).
SemigroupCheckReport check_smoothing(const DenseOperator& a, double t,
                                     double tol = kPsdCheckTol);

}  // namespace qbfa
