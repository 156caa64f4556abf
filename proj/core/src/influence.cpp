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

#include "qbfa/influence.hpp"

#include <cmath>
#include <stdexcept>

namespace qbfa {

FourierOperator d_j(const FourierOperator& f, int site) {
  if (site < 0 || site >= f.n()) {
    throw std::out_of_range("d_j: site index out of range");
  }
  return f.filtered([&](std::uint64_t idx) {
    return index_digit(idx, f.n(), site) != 0;
  });
}

DenseOperator dense_derivation(const DenseOperator& a, int site) {
  if (site < 0 || site >= a.n) {
    throw std::out_of_range("dense_derivation: site index out of range");
  }
  DenseOperator out = a;
  Matrix averaged = Matrix::Zero(a.dim(), a.dim());
  for (std::uint8_t k = 0; k < 4; ++k) {
    auto word = PauliString::identity(a.n).word();
    word[static_cast<size_t>(site)] = k;
    const Matrix sigma = pauli_matrix(PauliString(word)).mat;
    averaged += sigma * a.mat * sigma;
  }
  out.mat = a.mat - 0.25 * averaged;
  return out;
}

double influence(const FourierOperator& f, int site, double p) {
  const FourierOperator derived = d_j(f, site);
  if (p == 2.0) return derived.two_norm_squared();
  return std::pow(schatten(to_dense(derived), p), p);
}

InfluenceProfile profile(const FourierOperator& f) {
  InfluenceProfile out;
  out.n = f.n();
  out.inf1.resize(static_cast<size_t>(f.n()), 0.0);
  out.inf2.resize(static_cast<size_t>(f.n()), 0.0);
  for (int site = 0; site < f.n(); ++site) {
    const FourierOperator derived = d_j(f, site);
    out.inf2[static_cast<size_t>(site)] = derived.two_norm_squared();
    out.inf1[static_cast<size_t>(site)] = schatten(to_dense(derived), 1.0);
    out.total1 += out.inf1[static_cast<size_t>(site)];
    out.total2 += out.inf2[static_cast<size_t>(site)];
    if (out.inf1[static_cast<size_t>(site)] >
        out.inf1[static_cast<size_t>(out.argmax1)]) {
      out.argmax1 = site;
    }
  }
  return out;
}

}  // namespace qbfa
