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

#include "qbfa/pauli.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qbfa {
namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

struct StringMasks {
  std::uint64_t x_mask = 0;  // bit set where digit is 1 or 2
  std::uint64_t z_mask = 0;  // bit set where digit is 2 or 3
  int y_count = 0;           // number of digits equal to 2
};

// sigma_s |r> = i^y * (-1)^{popcount(r & z_mask)} |r ^ x_mask>.
StringMasks masks_of(std::uint64_t index, int n) {
  StringMasks m;
  for (int site = 0; site < n; ++site) {
    const int d = index_digit(index, n, site);
    const std::uint64_t bit = 1ULL << (n - 1 - site);
    if (d == 1 || d == 2) m.x_mask |= bit;
    if (d == 2 || d == 3) m.z_mask |= bit;
    if (d == 2) ++m.y_count;
  }
  return m;
}

double parity_sign(std::uint64_t bits) {
  return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

void check_same_system(const DenseOperator& a, const DenseOperator& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("operators act on different qubit counts");
  }
}

}  // namespace

PauliString::PauliString(std::vector<std::uint8_t> word)
    : word_(std::move(word)) {
  for (auto d : word_) {
    if (d > 3) throw std::invalid_argument("Pauli digit out of {0,1,2,3}");
  }
}

PauliString PauliString::identity(int n) {
  return PauliString(std::vector<std::uint8_t>(static_cast<size_t>(n), 0));
}

PauliString PauliString::from_base4(const std::string& text) {
  std::vector<std::uint8_t> word;
  word.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '3') {
      throw std::invalid_argument("Pauli string must be over '0123': " + text);
    }
    word.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return PauliString(std::move(word));
}

PauliString PauliString::from_index(std::uint64_t index, int n) {
  std::vector<std::uint8_t> word(static_cast<size_t>(n), 0);
  for (int site = 0; site < n; ++site) {
    word[static_cast<size_t>(site)] =
        static_cast<std::uint8_t>(index_digit(index, n, site));
  }
  return PauliString(std::move(word));
}

std::uint64_t PauliString::index() const {
  std::uint64_t idx = 0;
  for (auto d : word_) idx = (idx << 2) | d;
  return idx;
}

std::string PauliString::to_base4() const {
  std::string out;
  out.reserve(word_.size());
  for (auto d : word_) out.push_back(static_cast<char>('0' + d));
  return out;
}

std::vector<int> PauliString::support() const {
  std::vector<int> sites;
  for (int j = 0; j < size(); ++j) {
    if (word_[static_cast<size_t>(j)] != 0) sites.push_back(j);
  }
  return sites;
}

int PauliString::weight() const {
  int w = 0;
  for (auto d : word_) w += (d != 0);
  return w;
}

int index_weight(std::uint64_t index, int n) {
  int w = 0;
  for (int site = 0; site < n; ++site) w += (index_digit(index, n, site) != 0);
  return w;
}

DenseOperator DenseOperator::zero(int n) {
  DenseOperator a;
  a.n = n;
  a.mat = Matrix::Zero(std::int64_t{1} << n, std::int64_t{1} << n);
  return a;
}

DenseOperator DenseOperator::identity(int n) {
  DenseOperator a;
  a.n = n;
  a.mat = Matrix::Identity(std::int64_t{1} << n, std::int64_t{1} << n);
  return a;
}

FourierOperator::FourierOperator(int n, double support_tol)
    : n_(n), support_tol_(support_tol), dense_(n <= kDenseLimit) {
  if (n < 0 || n > 31) throw std::invalid_argument("qubit count out of range");
  if (dense_) flat_.assign(std::size_t{1} << (2 * n), Complex{0, 0});
}

Complex FourierOperator::coeff(std::uint64_t index) const {
  if (dense_) return flat_[index];
  auto it = map_.find(index);
  return it == map_.end() ? Complex{0, 0} : it->second;
}

void FourierOperator::set_coeff(std::uint64_t index, Complex value) {
  if (dense_) {
    flat_[index] = value;
  } else if (value == Complex{0, 0}) {
    map_.erase(index);
  } else {
    map_[index] = value;
  }
}

void FourierOperator::add_coeff(std::uint64_t index, Complex value) {
  if (dense_) {
    flat_[index] += value;
  } else {
    auto [it, inserted] = map_.try_emplace(index, value);
    if (!inserted) it->second += value;
  }
}

void FourierOperator::for_each(
    const std::function<void(std::uint64_t, Complex)>& visit) const {
  if (dense_) {
    for (std::uint64_t idx = 0; idx < flat_.size(); ++idx) {
      if (flat_[idx] != Complex{0, 0}) visit(idx, flat_[idx]);
    }
  } else {
    for (const auto& [idx, value] : map_) visit(idx, value);
  }
}

FourierOperator FourierOperator::filtered(
    const std::function<bool(std::uint64_t)>& keep) const {
  FourierOperator out(n_, support_tol_);
  for_each([&](std::uint64_t idx, Complex value) {
    if (keep(idx)) out.set_coeff(idx, value);
  });
  return out;
}

FourierOperator FourierOperator::rescaled(
    const std::function<double(std::uint64_t)>& factor) const {
  FourierOperator out(n_, support_tol_);
  for_each([&](std::uint64_t idx, Complex value) {
    out.set_coeff(idx, factor(idx) * value);
  });
  return out;
}

FourierOperator& FourierOperator::operator+=(const FourierOperator& other) {
  if (n_ != other.n_) throw std::invalid_argument("qubit count mismatch");
  other.for_each(
      [&](std::uint64_t idx, Complex value) { add_coeff(idx, value); });
  return *this;
}

FourierOperator& FourierOperator::operator-=(const FourierOperator& other) {
  if (n_ != other.n_) throw std::invalid_argument("qubit count mismatch");
  other.for_each(
      [&](std::uint64_t idx, Complex value) { add_coeff(idx, -value); });
  return *this;
}

FourierOperator& FourierOperator::operator*=(Complex scale) {
  if (dense_) {
    for (auto& v : flat_) v *= scale;
  } else {
    for (auto& [idx, v] : map_) v *= scale;
  }
  return *this;
}

double FourierOperator::two_norm_squared() const {
  double total = 0.0;
  for_each([&](std::uint64_t, Complex value) { total += std::norm(value); });
  return total;
}

bool FourierOperator::has_real_coefficients(double tol) const {
  bool real = true;
  for_each([&](std::uint64_t, Complex value) {
    if (std::abs(value.imag()) > tol) real = false;
  });
  return real;
}

std::size_t FourierOperator::stored_size() const {
  if (!dense_) return map_.size();
  std::size_t count = 0;
  for (const auto& v : flat_) count += (v != Complex{0, 0});
  return count;
}

FourierOperator operator+(FourierOperator a, const FourierOperator& b) {
  a += b;
  return a;
}

FourierOperator operator-(FourierOperator a, const FourierOperator& b) {
  a -= b;
  return a;
}

FourierOperator operator*(Complex scale, FourierOperator a) {
  a *= scale;
  return a;
}

DenseOperator pauli_matrix(const PauliString& s) {
  FourierOperator f(s.size());
  f.set_coeff(s, Complex{1, 0});
  return to_dense(f);
}

FourierOperator to_fourier(const DenseOperator& a, double support_tol) {
  const std::int64_t dim = a.dim();
  if (a.mat.rows() != dim || a.mat.cols() != dim) {
    throw std::invalid_argument("matrix dimension is not 2^n x 2^n");
  }
  FourierOperator f(a.n, support_tol);
  const std::uint64_t words = std::uint64_t{1} << (2 * a.n);
  const double scale = 1.0 / static_cast<double>(dim);
  for (std::uint64_t idx = 0; idx < words; ++idx) {
    const StringMasks m = masks_of(idx, a.n);
    Complex sum{0, 0};
    for (std::int64_t row = 0; row < dim; ++row) {
      const auto r = static_cast<std::uint64_t>(row);
      sum += parity_sign(r & m.z_mask) *
             a.mat(static_cast<std::int64_t>(r ^ m.x_mask), row);
    }
    const Complex value = scale * std::conj(kIPowers[m.y_count & 3]) * sum;
    if (value != Complex{0, 0}) f.set_coeff(idx, value);
  }
  return f;
}

DenseOperator to_dense(const FourierOperator& f) {
  DenseOperator a = DenseOperator::zero(f.n());
  const std::int64_t dim = a.dim();
  f.for_each([&](std::uint64_t idx, Complex value) {
    const StringMasks m = masks_of(idx, f.n());
    const Complex base = value * kIPowers[m.y_count & 3];
    for (std::int64_t col = 0; col < dim; ++col) {
      const auto c = static_cast<std::uint64_t>(col);
      a.mat(static_cast<std::int64_t>(c ^ m.x_mask), col) +=
          base * parity_sign(c & m.z_mask);
    }
  });
  return a;
}

namespace {

Eigen::VectorXd singular_values(const Matrix& m) {
  const double scale = m.cwiseAbs().maxCoeff();
  const double herm_gap = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_gap <= 1e-13 * std::max(1.0, scale)) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs();
  }
  if (m.rows() > 128) {
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues();
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

}  // namespace

NormValue schatten_norm(const DenseOperator& a, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("Schatten order must be >= 1");
  NormValue out;
  out.p = p;
  if (a.mat.size() == 0) return out;
  const Eigen::VectorXd sv = singular_values(a.mat);
  if (std::isinf(p)) {
    out.value = sv.maxCoeff();
    return out;
  }
  const double dim = static_cast<double>(a.dim());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) sum += std::pow(sv[i], p);
  out.value = std::pow(sum / dim, 1.0 / p);
  return out;
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m).maxCoeff();
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Matrix hermitian_function(const Matrix& m,
                          const std::function<double(double)>& f) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Eigen::VectorXd vals = es.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) vals[i] = f(vals[i]);
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

Matrix psd_sqrt(const Matrix& m) {
  return hermitian_function(
      m, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

Complex inner(const DenseOperator& a, const DenseOperator& b) {
  check_same_system(a, b);
  const Complex raw = a.mat.conjugate().cwiseProduct(b.mat).sum();
  return raw / static_cast<double>(a.dim());
}

double variance(const DenseOperator& a) {
  const double dim = static_cast<double>(a.dim());
  const double two_norm_sq = a.mat.squaredNorm() / dim;
  const Complex mean = a.mat.trace() / dim;
  return two_norm_sq - std::norm(mean);
}

double variance(const FourierOperator& f) {
  return f.two_norm_squared() - std::norm(f.mean_coefficient());
}

QuantumBooleanCheck is_quantum_boolean(const DenseOperator& a, double tol) {
  QuantumBooleanCheck check;
  check.hermiticity_residual = operator_norm(a.mat - a.mat.adjoint());
  check.square_residual = operator_norm(
      (a.mat * a.mat - Matrix::Identity(a.dim(), a.dim())).eval());
  check.ok =
      check.hermiticity_residual <= tol && check.square_residual <= tol;
  return check;
}

std::set<int> support_of(const FourierOperator& f, double tol) {
  std::set<int> sites;
  f.for_each([&](std::uint64_t idx, Complex value) {
    if (std::abs(value) <= tol) return;
    for (int site = 0; site < f.n(); ++site) {
      if (index_digit(idx, f.n(), site) != 0) sites.insert(site);
    }
  });
  return sites;
}

FourierOperator partial_average(const FourierOperator& f,
                                const std::set<int>& sites) {
  std::uint64_t site_mask = 0;
  for (int site : sites) {
    if (site < 0 || site >= f.n()) {
      throw std::invalid_argument("partial_average: site index out of range");
    }
    site_mask |= 1ULL << (f.n() - 1 - site);
  }
  return f.filtered([&](std::uint64_t idx) {
    const StringMasks m = masks_of(idx, f.n());
    return ((m.x_mask | m.z_mask) & site_mask) == 0;
  });
}

}  // namespace qbfa
