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
#include <span>
#include <string>

#include "qbfa/pauli.hpp"

namespace qbfa {

/**
 * One evaluated functional inequality. `rhs` carries the explicit constants
 * of the statement (pi, sqrt(2)pi, ...) but not any unnamed universal C; the
 * empirical C needed to make the bound hold is reported, never asserted,
 * unless the statement fixes every constant.
 */
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;                // evaluated with C = 1
  double implied_constant = 0.0;   // lhs / rhs when rhs > 0
  double satisfied_at = 0.0;       // smallest C making lhs <= C * rhs
  bool satisfied = false;          // at C = 1
  bool degenerate = false;         // rhs vanished (KKL at n=1, tau in {0,1})
  int n = 0;
  std::uint64_t seed = 0;
  std::string tag;
  std::map<std::string, double> extras;
};

/// ||A - 2^-n tr(A)||_1 <= pi * Inf^1(A); the constant pi is exact.
InequalityReport poincare_l1(const DenseOperator& a);

/**
 * Stronger chain: ||A - 2^-n tr(A)||_1 <= pi ||(sum_j d_j(A)* d_j(A))^{1/2}||_1
 * <= sqrt(2) pi ||Gamma(A)^{1/2}||_1. Extras hold all three values.
 */
InequalityReport strong_poincare_l1(const DenseOperator& a);

/**
 * Var(A) <= C sum_j a_j (1 + a_j) / (1 + log+(1/a_j))^{1/2} with
 * a_j = ||d_j A||_1, for ||A|| <= 1. Inputs with larger norm are rescaled
 * (scale recorded in extras["scale"]); C is reported only.
 */
InequalityReport talagrand_l1(const DenseOperator& a);

/**
 * The L1-L2 variance inequality specialized to the tracial qubit algebra:
 * Var(A) <= C0 sum_j b_j^2 / (1 + log(b_j / a_j)) with b_j = ||d_j A||_2,
 * a_j = ||d_j A||_1 and the prefactor C0 = 2 e^{(2a-mu)+/2l} / (a(1-e^{-1}))
 * at (lambda, alpha, mu) = (1, 1, 0). `squared_l2_variant` re-reads b_j as
 * ||d_j A||_2^2 for comparison with the other influence convention.
 */
InequalityReport talagrand_l1l2(const DenseOperator& a,
                                bool squared_l2_variant = false);

/**
 * max_j Inf^1_j(A) >= C sqrt(log n)/n for balanced quantum Boolean A.
 * Throws unless A passes the Boolean/balance precondition.
 */
InequalityReport kkl_max_influence(const DenseOperator& a,
                                   double tol = kDefaultSupportTol);

struct AuxKklResult {
  bool applicable = false;  // hypothesis sum >= c held
  bool holds = false;
  double hypothesis_sum = 0.0;
  double max_term = 0.0;
  double conclusion_bound = 0.0;
};

/**
 * Pure-number lemma: if sum_j a_j(1+a_j)/(1+log+(1/a_j))^{1/2} >= c then
 * max_j a_j >= min{c/(2 sqrt 2), 1} sqrt(log n)/n.
 */
AuxKklResult lemma_aux_kkl(std::span<const double> a, double c);

struct IntegralLemmaReport {
  double lhs = 0.0;         // the integral, adaptive quadrature
  double rhs = 0.0;         // (1/sqrt(alpha)) (1+a)/(1+log+(1/a))^{1/2}
  double implied_constant = 0.0;
};

/**
 * int_0^r t^{-(1-1/p(t))} a^{2/p(t)-1} dt with p(t) = 1 + e^{-2 alpha t},
 * for alpha > 0, a >= 0, 0 <= r <= min(1, 1/(2 alpha)). Quadrature relative
 * error 1e-8.
 */
IntegralLemmaReport integral_lemma_check(double alpha, double a, double r);

/**
 * Qubit isoperimetry: sum_j Inf^1_j(P) >= C tau(1-tau) log(n/(tau(1-tau)))^{1/2}
 * for a projector P with tau = 2^-n tr(P). tau in {0,1} short-circuits.
 */
InequalityReport isoperimetry_check(const DenseOperator& projector,
                                    double tol = 1e-8);

/// log+(x) = max(log x, 0); zero arguments contribute zero terms upstream.
double log_plus(double x);

}  // namespace qbfa
