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

#include "qbfa/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "qbfa/rng.hpp"

namespace qbfa {
namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::int64_t set_bit(std::int64_t value, std::int64_t mask, bool on) {
  return on ? (value | mask) : (value & ~mask);
}

// (tr(omega .) 1 at `site`)(x): averages the site against omega.
Matrix site_average(const WeightedContext& ctx, const Matrix& x, int site) {
  const std::int64_t dim = x.rows();
  const std::int64_t mask = std::int64_t{1} << (ctx.n - 1 - site);
  Matrix out = Matrix::Zero(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    for (std::int64_t c = 0; c < dim; ++c) {
      if ((r & mask) != (c & mask)) continue;
      Complex value{0, 0};
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          value += ctx.omega(b, a) *
                   x(set_bit(r, mask, a != 0), set_bit(c, mask, b != 0));
        }
      }
      out(r, c) = value;
    }
  }
  return out;
}

void check_site(const WeightedContext& ctx, int site) {
  if (site < 0 || site >= ctx.n) {
    throw std::out_of_range("site index out of range");
  }
}

}  // namespace

WeightedContext WeightedContext::make(int n, const Matrix& omega) {
  if (omega.rows() != 2 || omega.cols() != 2) {
    throw std::invalid_argument("omega must be 2x2");
  }
  if (operator_norm((omega - omega.adjoint()).eval()) > 1e-12) {
    throw std::invalid_argument("omega must be Hermitian");
  }
  if (std::abs(omega.trace().real() - 1.0) > 1e-12 ||
      std::abs(omega.trace().imag()) > 1e-12) {
    throw std::invalid_argument("omega must have unit trace");
  }
  WeightedContext ctx;
  ctx.n = n;
  ctx.omega = omega;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(omega);
  ctx.omega_evals = es.eigenvalues();
  ctx.omega_evecs = es.eigenvectors();
  if (ctx.omega_evals.minCoeff() <= 0.0) {
    throw std::invalid_argument("omega must be full rank");
  }
  return ctx;
}

WeightedContext WeightedContext::diagonal(int n, double q) {
  Matrix omega = Matrix::Zero(2, 2);
  omega(0, 0) = q;
  omega(1, 1) = 1.0 - q;
  return make(n, omega);
}

Matrix WeightedContext::sigma_power(double exponent) const {
  Eigen::Vector2d powered;
  powered[0] = std::pow(omega_evals[0], exponent);
  powered[1] = std::pow(omega_evals[1], exponent);
  const Matrix single =
      omega_evecs * powered.asDiagonal().toDenseMatrix().cast<Complex>() *
      omega_evecs.adjoint();
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, single);
  return out;
}

Complex WeightedContext::state(const Matrix& x) const {
  return (sigma_power(1.0) * x).trace();
}

double WeightedContext::condition_number() const {
  return std::pow(omega_evals.maxCoeff() / omega_evals.minCoeff(), n);
}

double kms_norm(const WeightedContext& ctx, const Matrix& x, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  if (std::isinf(p)) return operator_norm(x);
  const Matrix sandwich = ctx.sigma_power(1.0 / (2.0 * p));
  const Matrix embedded = sandwich * x * sandwich;
  Eigen::BDCSVD<Matrix> svd(embedded);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    sum += std::pow(svd.singularValues()[i], p);
  }
  return std::pow(sum, 1.0 / p);
}

Complex kms_inner(const WeightedContext& ctx, const Matrix& x,
                  const Matrix& y) {
  const Matrix half = ctx.sigma_power(0.5);
  return (half * x.adjoint() * half * y).trace();
}

Matrix weighted_d_j(const WeightedContext& ctx, const Matrix& x, int site) {
  check_site(ctx, site);
  return x - site_average(ctx, x, site);
}

Matrix weighted_semigroup(const WeightedContext& ctx, const Matrix& x,
                          double t) {
  if (t < 0.0) throw std::invalid_argument("t must be >= 0");
  const double decay = std::exp(-t);
  Matrix out = x;
  for (int site = 0; site < ctx.n; ++site) {
    out = decay * out + (1.0 - decay) * site_average(ctx, out, site);
  }
  return out;
}

Matrix weighted_generator(const WeightedContext& ctx, const Matrix& x) {
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (int site = 0; site < ctx.n; ++site) {
    out += weighted_d_j(ctx, x, site);
  }
  return out;
}

Matrix weighted_carre_du_champ(const WeightedContext& ctx, const Matrix& x) {
  const Matrix lx = weighted_generator(ctx, x);
  const Matrix lxx = weighted_generator(ctx, (x.adjoint() * x).eval());
  return 0.5 * (lx.adjoint() * x + x.adjoint() * lx - lxx);
}

double e_k(double k_const, double t) {
  if (k_const == 0.0) return 2.0 * t;
  return std::expm1(2.0 * k_const * t) / k_const;
}

namespace {

std::vector<Matrix> axiom_test_set(const WeightedContext& ctx,
                                   std::uint64_t seed, int samples) {
  Rng rng(seed);
  const std::int64_t dim = std::int64_t{1} << ctx.n;
  std::vector<Matrix> set;
  for (int i = 0; i < samples; ++i) {
    Matrix g(dim, dim);
    for (std::int64_t c = 0; c < dim; ++c) {
      for (std::int64_t r = 0; r < dim; ++r) g(r, c) = rng.complex_gaussian();
    }
    // Alternate general and Hermitian test operators.
    if (i % 2 == 0) g = ((g + g.adjoint()) / 2.0).eval();
    set.push_back(g / std::max(1.0, operator_norm(g)));
  }
  return set;
}

const std::vector<double> kTimeGrid = {0.05, 0.1, 0.25, 0.5, 1.0, 2.0};
const std::vector<double> kOrderGrid = {
    1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()};

}  // namespace

AxiomReport verify_axioms(const WeightedContext& ctx, double tol,
                          std::uint64_t seed, int samples) {
  AxiomReport report;
  report.sigma_condition = ctx.condition_number();
  const std::vector<Matrix> test_set = axiom_test_set(ctx, seed, samples);
  const Matrix id = Matrix::Identity(std::int64_t{1} << ctx.n,
                                     std::int64_t{1} << ctx.n);
  constexpr double kGradK = 0.5;

  AxiomCheck dirichlet{"A2-1 dirichlet identity", true, true, 0.0, 1.0};
  AxiomCheck gradient{"A1 gradient estimate", true, true, 0.0, kGradK};
  AxiomCheck reverse{"A1 reverse poincare", true, true, 0.0, kGradK};
  AxiomCheck lipschitz{"A2-2 derivation bound", true, true, 0.0,
                       std::numbers::sqrt2};
  AxiomCheck poincare{"A3 poincare", true, true, 0.0, 1.0};
  AxiomCheck intertwine{"A5 derivation decay", true, true, 0.0, 1.0};

  for (const Matrix& x : test_set) {
    // (A2-1): <x, L x>_omega = sum_j <d_j x, d_j x>_omega.
    const Complex lhs_q = kms_inner(ctx, x, weighted_generator(ctx, x));
    Complex rhs_q{0, 0};
    for (int j = 0; j < ctx.n; ++j) {
      const Matrix dx = weighted_d_j(ctx, x, j);
      rhs_q += kms_inner(ctx, dx, dx);
    }
    const double gap = std::abs(lhs_q - rhs_q);
    dirichlet.worst_slack = std::min(dirichlet.worst_slack, -gap);
    if (gap > tol) dirichlet.satisfied = false;

    // (A2-2): max_j ||d_j x|| <= sqrt 2 ||Gamma(x)||^{1/2}.
    const Matrix gamma = weighted_carre_du_champ(ctx, x);
    const double gamma_cap =
        std::numbers::sqrt2 * std::sqrt(std::max(operator_norm(gamma), 0.0));
    for (int j = 0; j < ctx.n; ++j) {
      const double margin =
          gamma_cap - operator_norm(weighted_d_j(ctx, x, j));
      lipschitz.worst_slack = std::min(lipschitz.worst_slack, margin);
      if (margin < -tol) lipschitz.satisfied = false;
    }

    // (A3): ||i_2(x - phi(x) 1)||^2 <= <x, L x>_omega.
    const Matrix centered = x - ctx.state(x) * id;
    const double var = kms_inner(ctx, centered, centered).real();
    const double margin_a3 = lhs_q.real() - var;
    poincare.worst_slack = std::min(poincare.worst_slack, margin_a3);
    if (margin_a3 < -tol) poincare.satisfied = false;

    const double x_norm = operator_norm(x);
    for (double t : kTimeGrid) {
      const Matrix evolved = weighted_semigroup(ctx, x, t);
      const Matrix gamma_evolved = weighted_carre_du_champ(ctx, evolved);

      // (A1): Gamma(P_t x) <= e^{-2Kt} P_t Gamma(x), K = 1/2.
      const Matrix rhs_op = std::exp(-2.0 * kGradK * t) *
                            weighted_semigroup(ctx, gamma, t);
      const double slack_a1 = min_eigenvalue(rhs_op - gamma_evolved);
      gradient.worst_slack = std::min(gradient.worst_slack, slack_a1);
      if (slack_a1 < -tol) gradient.satisfied = false;

      // Reverse Poincare: Gamma(P_t x) <= (P_t(x*x) - P_t(x)* P_t(x))/e_K(t)
      // and the ||x||^2 / e_K(t) cap.
      const double ek = e_k(kGradK, t);
      const Matrix variance_op =
          weighted_semigroup(ctx, (x.adjoint() * x).eval(), t) -
          evolved.adjoint() * evolved;
      const double slack_rev = std::min(
          min_eigenvalue(variance_op / ek - gamma_evolved),
          min_eigenvalue((x_norm * x_norm / ek) * id - gamma_evolved));
      reverse.worst_slack = std::min(reverse.worst_slack, slack_rev);
      if (slack_rev < -tol) reverse.satisfied = false;

      // (A5) with mu = 1: the damped derivation d_j P_t = e^{-t} P_t^(j-hat) d_j
      // decays in every i_p norm against the underived i_p(d_j x).
      for (int j = 0; j < ctx.n; ++j) {
        const Matrix lhs_op = weighted_d_j(ctx, evolved, j);
        const Matrix rhs_base = weighted_d_j(ctx, x, j);
        for (double p : kOrderGrid) {
          const double margin = std::exp(-t) * kms_norm(ctx, rhs_base, p) -
                                kms_norm(ctx, lhs_op, p);
          intertwine.worst_slack = std::min(intertwine.worst_slack, margin);
          if (margin < -tol) intertwine.satisfied = false;
        }
      }
    }
  }

  // (A4): largest alpha with ||i_2(P_t x)|| <= ||i_{1+e^{-2 alpha t}}(x)||
  // across the sample sweep; reported, never asserted.
  const auto alpha_feasible = [&](double alpha) {
    for (const Matrix& x : test_set) {
      for (int k = 1; k <= 40; ++k) {
        const double t = 0.05 * k;
        const double p = 1.0 + std::exp(-2.0 * alpha * t);
        const double lhs = kms_norm(ctx, weighted_semigroup(ctx, x, t), 2.0);
        if (lhs > kms_norm(ctx, x, p) + tol) return false;
      }
    }
    return true;
  };
  double lo = 0.0, hi = 4.0;
  if (alpha_feasible(hi)) {
    report.best_alpha = hi;
  } else {
    for (int iter = 0; iter < 30; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (alpha_feasible(mid) ? lo : hi) = mid;
    }
    report.best_alpha = lo;
  }

  AxiomCheck hyper{"A4 hypercontractivity alpha", false,
                   report.best_alpha > 0.0, 0.0, report.best_alpha};

  report.checks = {dirichlet, gradient, reverse, lipschitz,
                   poincare,  intertwine, hyper};
  report.all_asserted_pass = true;
  for (const auto& c : report.checks) {
    if (c.asserted && !c.satisfied) report.all_asserted_pass = false;
  }
  return report;
}

InequalityReport general_poincare_l1(const WeightedContext& ctx,
                                     const Matrix& x) {
  constexpr double kGradK = 0.5;
  const double m_const = std::numbers::sqrt2;
  InequalityReport r;
  r.name = "general_poincare_l1";
  r.n = ctx.n;
  const Matrix id = Matrix::Identity(x.rows(), x.cols());
  const Matrix centered = x - ctx.state(x) * id;
  r.lhs = std::sqrt(kGradK) / m_const * kms_norm(ctx, centered, 1.0);
  double influence_sum = 0.0;
  for (int j = 0; j < ctx.n; ++j) {
    influence_sum += kms_norm(ctx, weighted_d_j(ctx, x, j), 1.0);
  }
  r.rhs = std::numbers::pi / 2.0 * influence_sum;
  r.extras["k"] = kGradK;
  r.extras["m"] = m_const;
  if (r.rhs > 0.0) {
    r.implied_constant = r.lhs / r.rhs;
    r.satisfied_at = r.implied_constant;
    r.satisfied = r.lhs <= r.rhs * (1.0 + 1e-9) + 1e-12;
  } else {
    r.satisfied = r.lhs <= 1e-12;
  }
  return r;
}

}  // namespace qbfa
