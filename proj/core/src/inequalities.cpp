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

#include "qbfa/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qbfa/influence.hpp"
#include "qbfa/semigroup.hpp"

namespace qbfa {
namespace {

constexpr double kRelSlack = 1e-9;
constexpr double kAbsSlack = 1e-12;

void finalize(InequalityReport& r) {
  if (r.rhs > 0.0) {
    r.implied_constant = r.lhs / r.rhs;
    r.satisfied_at = r.implied_constant;
    r.satisfied = r.lhs <= r.rhs * (1.0 + kRelSlack) + kAbsSlack;
  } else if (r.lhs <= kAbsSlack) {
    r.implied_constant = 0.0;
    r.satisfied_at = 0.0;
    r.satisfied = true;
  } else {
    r.implied_constant = std::numeric_limits<double>::infinity();
    r.satisfied_at = r.implied_constant;
    r.satisfied = false;
  }
}

DenseOperator centered(const DenseOperator& a) {
  DenseOperator out = a;
  const Complex mean = a.mat.trace() / static_cast<double>(a.dim());
  out.mat -= mean * Matrix::Identity(a.dim(), a.dim());
  return out;
}

// a (1 + a) / (1 + log+(1/a))^{1/2}, extended by 0 at a = 0.
double talagrand_term(double a) {
  if (a <= 0.0) return 0.0;
  return a * (1.0 + a) / std::sqrt(1.0 + log_plus(1.0 / a));
}

}  // namespace

double log_plus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

InequalityReport poincare_l1(const DenseOperator& a) {
  InequalityReport r;
  r.name = "poincare_l1";
  r.n = a.n;
  r.lhs = schatten(centered(a), 1.0);
  r.rhs = std::numbers::pi * profile(a).total1;
  finalize(r);
  return r;
}

InequalityReport strong_poincare_l1(const DenseOperator& a) {
  InequalityReport r;
  r.name = "strong_poincare_l1";
  r.n = a.n;
  r.lhs = schatten(centered(a), 1.0);

  const FourierOperator f = to_fourier(a);
  Matrix gradient_square = Matrix::Zero(a.dim(), a.dim());
  for (int site = 0; site < a.n; ++site) {
    const Matrix derived = to_dense(d_j(f, site)).mat;
    gradient_square += derived.adjoint() * derived;
  }
  const double middle =
      std::numbers::pi *
      schatten(DenseOperator{a.n, psd_sqrt(gradient_square)}, 1.0);
  const double right =
      std::numbers::sqrt2 * std::numbers::pi *
      schatten(DenseOperator{a.n, psd_sqrt(carre_du_champ(a).mat)}, 1.0);

  r.rhs = middle;
  r.extras["middle"] = middle;
  r.extras["right"] = right;
  finalize(r);
  r.satisfied = r.satisfied &&
                middle <= right * (1.0 + kRelSlack) + kAbsSlack;
  return r;
}

InequalityReport talagrand_l1(const DenseOperator& a) {
  InequalityReport r;
  r.name = "talagrand_l1";
  r.n = a.n;

  const double norm = operator_norm(a.mat);
  const double scale = norm > 1.0 ? norm : 1.0;
  DenseOperator b = a;
  b.mat /= scale;
  r.extras["scale"] = scale;

  r.lhs = variance(b);
  const InfluenceProfile prof = profile(b);
  double sum = 0.0;
  for (double aj : prof.inf1) sum += talagrand_term(aj);
  r.rhs = sum;
  finalize(r);
  return r;
}

InequalityReport talagrand_l1l2(const DenseOperator& a,
                                bool squared_l2_variant) {
  InequalityReport r;
  r.name = squared_l2_variant ? "talagrand_l1l2_sq" : "talagrand_l1l2";
  r.n = a.n;
  r.lhs = variance(a);

  // Prefactor 2 e^{(2 alpha - mu)+ / 2 lambda} / (alpha (1 - e^{-1})) at
  // (lambda, alpha, mu) = (1, 1, 0) for the tracial depolarizing semigroup.
  const double prefactor = 2.0 * std::exp(1.0) / (1.0 - std::exp(-1.0));
  r.extras["prefactor"] = prefactor;

  const FourierOperator f = to_fourier(a);
  double sum = 0.0;
  for (int site = 0; site < a.n; ++site) {
    const FourierOperator derived = d_j(f, site);
    const double l2 = std::sqrt(derived.two_norm_squared());
    if (l2 <= 0.0) continue;
    const double l1 = schatten(to_dense(derived), 1.0);
    const double b = squared_l2_variant ? l2 * l2 : l2;
    sum += b * b / (1.0 + std::log(b / l1));
  }
  r.rhs = prefactor * sum;
  finalize(r);
  return r;
}

InequalityReport kkl_max_influence(const DenseOperator& a, double tol) {
  const QuantumBooleanCheck check = is_quantum_boolean(a, tol);
  const double trace_residual =
      std::abs(a.mat.trace()) / static_cast<double>(a.dim());
  if (!check.ok || trace_residual > tol) {
    throw std::invalid_argument(
        "kkl_max_influence requires a balanced quantum Boolean function");
  }

  InequalityReport r;
  r.name = "kkl_max_influence";
  r.n = a.n;
  const InfluenceProfile prof = profile(a);
  r.lhs = *std::max_element(prof.inf1.begin(), prof.inf1.end());
  r.rhs = std::sqrt(std::log(static_cast<double>(a.n))) /
          static_cast<double>(a.n);
  if (r.rhs <= 0.0) {
    r.degenerate = true;
    r.satisfied = true;
    return r;
  }
  finalize(r);
  return r;
}

AuxKklResult lemma_aux_kkl(std::span<const double> a, double c) {
  if (c <= 0.0) throw std::invalid_argument("lemma_aux_kkl: c must be > 0");
  AuxKklResult out;
  for (double aj : a) {
    if (aj < 0.0) {
      throw std::invalid_argument("lemma_aux_kkl: terms must be >= 0");
    }
    out.hypothesis_sum += talagrand_term(aj);
    out.max_term = std::max(out.max_term, aj);
  }
  out.applicable = out.hypothesis_sum >= c * (1.0 - kRelSlack);
  if (!out.applicable) return out;

  const double count = static_cast<double>(a.size());
  out.conclusion_bound = std::min(c / (2.0 * std::numbers::sqrt2), 1.0) *
                         std::sqrt(std::log(count)) / count;
  out.holds = out.max_term >= out.conclusion_bound * (1.0 - kRelSlack);
  return out;
}

namespace {

template <typename F>
double adaptive_simpson(const F& f, double lo, double hi, double f_lo,
                        double f_mid, double f_hi, double whole, double eps,
                        int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lm = 0.5 * (lo + mid);
  const double mh = 0.5 * (mid + hi);
  const double f_lm = f(lm);
  const double f_mh = f(mh);
  const double left = (mid - lo) / 6.0 * (f_lo + 4.0 * f_lm + f_mid);
  const double right = (hi - mid) / 6.0 * (f_mid + 4.0 * f_mh + f_hi);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, lo, mid, f_lo, f_lm, f_mid, left, 0.5 * eps,
                          depth - 1) +
         adaptive_simpson(f, mid, hi, f_mid, f_mh, f_hi, right, 0.5 * eps,
                          depth - 1);
}

template <typename F>
double integrate(const F& f, double lo, double hi, double rel_tol) {
  if (hi <= lo) return 0.0;
  const double mid = 0.5 * (lo + hi);
  const double f_lo = f(lo);
  const double f_mid = f(mid);
  const double f_hi = f(hi);
  const double whole = (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
  const double eps = rel_tol * std::max(std::abs(whole), 1e-6);
  return adaptive_simpson(f, lo, hi, f_lo, f_mid, f_hi, whole, eps, 48);
}

}  // namespace

IntegralLemmaReport integral_lemma_check(double alpha, double a, double r) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  if (a < 0.0) throw std::invalid_argument("a must be >= 0");
  const double r_cap = std::min(1.0, 1.0 / (2.0 * alpha));
  if (r < 0.0 || r > r_cap * (1.0 + 1e-12)) {
    throw std::invalid_argument("r out of [0, min(1, 1/(2 alpha))]");
  }

  IntegralLemmaReport out;
  out.rhs = (1.0 / std::sqrt(alpha)) * (1.0 + a) /
            std::sqrt(1.0 + log_plus(1.0 / a));
  if (a == 0.0 || r == 0.0) {
    out.lhs = 0.0;
    out.implied_constant = 0.0;
    return out;
  }

  // Substituting t = u^2 removes the endpoint singularity: the integrand
  // becomes 2 (u a)^{tanh(alpha u^2)}, continuous down to u = 0.
  const auto integrand = [&](double u) {
    if (u <= 0.0) return 2.0;
    const double expo = std::tanh(alpha * u * u);
    return 2.0 * std::pow(u * a, expo);
  };
  out.lhs = integrate(integrand, 0.0, std::sqrt(r), 1e-8);
  out.implied_constant = out.lhs / out.rhs;
  return out;
}

InequalityReport isoperimetry_check(const DenseOperator& projector,
                                    double tol) {
  const Matrix& p = projector.mat;
  const double herm = operator_norm((p - p.adjoint()).eval());
  const double idem = operator_norm((p * p - p).eval());
  if (herm > tol || idem > tol) {
    throw std::invalid_argument("isoperimetry_check requires a projector");
  }

  InequalityReport r;
  r.name = "isoperimetry";
  r.n = projector.n;
  const double tau =
      p.trace().real() / static_cast<double>(projector.dim());
  r.extras["tau"] = tau;
  const double mass = tau * (1.0 - tau);
  if (mass <= tol) {
    r.degenerate = true;
    r.satisfied = true;
    return r;
  }

  r.lhs = profile(projector).total1;
  r.rhs = mass * std::sqrt(std::log(static_cast<double>(projector.n) / mass));
  finalize(r);
  return r;
}

}  // namespace qbfa
