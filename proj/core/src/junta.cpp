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

#include "qbfa/junta.hpp"

#include <cmath>
#include <stdexcept>

#include "qbfa/influence.hpp"

namespace qbfa {
namespace {

void check_eps(double eps) {
  if (!(eps > 0.0) || eps > 2.0) {
    throw std::invalid_argument("eps must lie in (0, 2]");
  }
}

constexpr double kAlphaFloor = 1e-12;

}  // namespace

double junta_bound(double inf1, double inf2, double eps,
                   bool boolean_corollary) {
  check_eps(eps);
  if (inf1 < 0.0 || inf2 < 0.0) {
    throw std::invalid_argument("influences must be >= 0");
  }
  if (inf2 == 0.0) return 0.0;
  if (inf1 == 0.0) return 0.0;
  const double rate = boolean_corollary ? 432.0 : 48.0;
  const double base = boolean_corollary ? 6.0 : 2.0;
  const double exponent_scale = rate * inf2 / (eps * eps);
  // Assembled in log space: the bound overflows double well inside the
  // theorem's parameter range and then reads as +inf.
  double log_bound;
  if (inf2 >= 1.0) {
    log_bound = 2.0 * std::log(inf1) +
                exponent_scale * std::log(base * inf2 / eps);
  } else {
    log_bound = 2.0 * std::log(inf1) - std::log(inf2) +
                exponent_scale * std::log(base * std::sqrt(inf2) / eps);
  }
  return std::exp(log_bound);
}

JuntaResult friedgut_extract(const DenseOperator& a, double eps) {
  check_eps(eps);
  const FourierOperator f = to_fourier(a);
  const InfluenceProfile prof = profile(f);
  const double inf1 = prof.total1;
  const double inf2 = prof.total2;

  JuntaResult out;
  out.k_bound = junta_bound(inf1, inf2, eps);

  if (inf2 <= 0.0) {
    out.junta = f;
    out.error_l2 = 0.0;
    out.k_actual = 0;
    return out;
  }

  // t is the same in both branches; the Inf^2 < 1 case runs on the rescaled
  // operator lambda A at eps' = lambda eps, which folds back into a single
  // effective threshold on the Inf^1_j of A.
  const double t = eps * eps / (16.0 * inf2);
  double alpha = std::tanh(t);
  if (alpha < kAlphaFloor) {
    alpha = kAlphaFloor;
    out.degenerate_alpha = true;
  }
  double eta;
  if (inf2 >= 1.0) {
    eta = std::pow(eps / 2.0, 2.0 / alpha) /
          (inf1 * std::pow(inf2, (1.0 - alpha) / alpha));
  } else {
    const double lambda = 1.0 / std::sqrt(inf2);
    eta = std::pow(lambda * eps / 2.0, 2.0 / alpha) * inf2 / inf1;
  }
  out.t = t;
  out.eta = eta;

  // Strict comparison: on exact ties the site is kept. Either resolution
  // satisfies both certified guarantees; keeping is the conservative one for
  // the approximation error.
  for (int site = 0; site < f.n(); ++site) {
    if (prof.inf1[static_cast<size_t>(site)] < eta) {
      out.discarded.insert(site);
    }
  }
  out.junta = partial_average(f, out.discarded);
  out.k_actual = f.n() - static_cast<int>(out.discarded.size());

  FourierOperator gap = f;
  gap -= out.junta;
  out.error_l2 = std::sqrt(gap.two_norm_squared());
  return out;
}

DenseOperator sign_round(const DenseOperator& b) {
  const double herm = operator_norm((b.mat - b.mat.adjoint()).eval());
  if (herm > 1e-10 * std::max(1.0, operator_norm(b.mat))) {
    throw std::invalid_argument("sign_round requires a Hermitian operator");
  }
  const Matrix sym = 0.5 * (b.mat + b.mat.adjoint());
  DenseOperator rounded{
      b.n, hermitian_function(
               sym, [](double x) { return x > 1e-12 ? 1.0 : -1.0; })};

  // |lambda - sgn(lambda)|^2 <= |lambda^2 - 1|^2 eigenvalue by eigenvalue.
  const double gap =
      schatten(DenseOperator{b.n, (sym - rounded.mat).eval()}, 2.0);
  const double cap = schatten(
      DenseOperator{b.n,
                    (sym * sym - Matrix::Identity(b.dim(), b.dim())).eval()},
      2.0);
  if (gap > cap + 1e-10) {
    throw std::logic_error("sign_round contraction bound violated");
  }
  return rounded;
}

BooleanJuntaResult boolean_junta(const DenseOperator& a, double eps,
                                 double tol) {
  check_eps(eps);
  if (!is_quantum_boolean(a, tol).ok) {
    throw std::invalid_argument(
        "boolean_junta requires a quantum Boolean function");
  }

  BooleanJuntaResult out;
  out.extraction = friedgut_extract(a, eps / 3.0);
  out.junta = sign_round(to_dense(out.extraction.junta));
  out.k_actual = out.extraction.k_actual;

  const InfluenceProfile prof = profile(a);
  out.k_bound = junta_bound(prof.total1, prof.total2, eps, true);

  DenseOperator gap = a;
  gap.mat -= out.junta.mat;
  out.error_l2 = schatten(gap, 2.0);
  return out;
}

}  // namespace qbfa
