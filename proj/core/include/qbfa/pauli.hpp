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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace qbfa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kDefaultSupportTol = 1e-10;

/**
 * A word s in {0,1,2,3}^n indexing the tensor product
 * sigma_s = sigma_{s_1} x ... x sigma_{s_n}. Site 0 is the leftmost tensor
 * factor and the most significant bit of computational-basis indices.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<std::uint8_t> word);

  static PauliString identity(int n);
  /// Parses e.g. "031" into (sigma_0, sigma_3, sigma_1). Throws on bad input.
  static PauliString from_base4(const std::string& text);
  static PauliString from_index(std::uint64_t index, int n);

  int size() const { return static_cast<int>(word_.size()); }
  std::uint8_t at(int site) const { return word_[static_cast<size_t>(site)]; }
  const std::vector<std::uint8_t>& word() const { return word_; }

  /// Base-4 packing with site 0 in the most significant position.
  std::uint64_t index() const;
  std::string to_base4() const;

  std::vector<int> support() const;
  int weight() const;
  bool is_identity() const { return weight() == 0; }

  bool operator==(const PauliString& other) const = default;

 private:
  std::vector<std::uint8_t> word_;
};

/// Number of non-zero base-4 digits of a packed word.
int index_weight(std::uint64_t index, int n);
/// Base-4 digit of `site` (site 0 = most significant).
inline int index_digit(std::uint64_t index, int n, int site) {
  return static_cast<int>((index >> (2 * (n - 1 - site))) & 3ULL);
}

/** A 2^n x 2^n complex matrix together with its qubit count. */
struct DenseOperator {
  int n = 0;
  Matrix mat;

  static DenseOperator zero(int n);
  static DenseOperator identity(int n);
  std::int64_t dim() const { return std::int64_t{1} << n; }
};

/**
 * An operator held by its Pauli coefficients A_s, the canonical in-memory
 * form for everything that acts diagonally on Pauli strings.
 *
 * Storage is a flat 4^n array up to n = 7 and a hash map beyond that; both
 * paths expose identical semantics. Coefficients smaller than the support
 * tolerance count as absent for support decisions only, never for algebra.
 */
class FourierOperator {
 public:
  static constexpr int kDenseLimit = 7;

  FourierOperator() = default;
  explicit FourierOperator(int n, double support_tol = kDefaultSupportTol);

  int n() const { return n_; }
  double support_tol() const { return support_tol_; }
  void set_support_tol(double tol) { support_tol_ = tol; }

  Complex coeff(std::uint64_t index) const;
  Complex coeff(const PauliString& s) const { return coeff(s.index()); }
  void set_coeff(std::uint64_t index, Complex value);
  void set_coeff(const PauliString& s, Complex value) {
    set_coeff(s.index(), value);
  }
  void add_coeff(std::uint64_t index, Complex value);

  /// Visits every stored coefficient (zeros in the flat array are skipped).
  void for_each(
      const std::function<void(std::uint64_t, Complex)>& visit) const;

  /// Keeps the coefficients selected by `keep`, zeroing the rest.
  FourierOperator filtered(
      const std::function<bool(std::uint64_t)>& keep) const;
  /// Multiplies each coefficient by `factor(index)`.
  FourierOperator rescaled(
      const std::function<double(std::uint64_t)>& factor) const;

  FourierOperator& operator+=(const FourierOperator& other);
  FourierOperator& operator-=(const FourierOperator& other);
  FourierOperator& operator*=(Complex scale);

  Complex mean_coefficient() const { return coeff(0); }  // A_0
  /// Sum of |A_s|^2 over all coefficients (= ||A||_2^2 by Parseval).
  double two_norm_squared() const;
  /// True when every coefficient is real within `tol` (A self-adjoint).
  bool has_real_coefficients(double tol) const;
  std::size_t stored_size() const;

 private:
  int n_ = 0;
  double support_tol_ = kDefaultSupportTol;
  bool dense_ = true;
  std::vector<Complex> flat_;
  std::unordered_map<std::uint64_t, Complex> map_;
};

FourierOperator operator+(FourierOperator a, const FourierOperator& b);
FourierOperator operator-(FourierOperator a, const FourierOperator& b);
FourierOperator operator*(Complex scale, FourierOperator a);

struct NormValue {
  double p = 2.0;  // infinity() for the operator norm
  double value = 0.0;
};

struct QuantumBooleanCheck {
  bool ok = false;
  double hermiticity_residual = 0.0;  // ||A - A*||_inf
  double square_residual = 0.0;       // ||A^2 - 1||_inf
};

/// sigma_s as a dense matrix (Hermitian and unitary).
DenseOperator pauli_matrix(const PauliString& s);

/// A_s = 2^-n tr(sigma_s A) for every s.
FourierOperator to_fourier(const DenseOperator& a,
                           double support_tol = kDefaultSupportTol);
/// A = sum_s A_s sigma_s.
DenseOperator to_dense(const FourierOperator& f);

/**
 * Normalized Schatten norm (2^-n tr|A|^p)^{1/p}; p = inf gives the operator
 * norm. ||1||_p = 1 for every p. Throws for p < 1.
 */
NormValue schatten_norm(const DenseOperator& a, double p);
inline double schatten(const DenseOperator& a, double p) {
  return schatten_norm(a, p).value;
}

/// Operator norm of an arbitrary matrix (largest singular value).
double operator_norm(const Matrix& m);
/// Smallest eigenvalue of a (numerically) Hermitian matrix.
double min_eigenvalue(const Matrix& m);
/// Spectral calculus f(A) for Hermitian A.
Matrix hermitian_function(const Matrix& m, const std::function<double(double)>& f);
/// PSD square root with negative eigenvalues clamped to zero.
Matrix psd_sqrt(const Matrix& m);

/// Normalized Hilbert-Schmidt inner product 2^-n tr(A* B).
Complex inner(const DenseOperator& a, const DenseOperator& b);

/// Var(A) = ||A - 2^-n tr(A) 1||_2^2.
double variance(const DenseOperator& a);
double variance(const FourierOperator& f);

/// A = A* and A^2 = 1, both within tol; residuals reported.
QuantumBooleanCheck is_quantum_boolean(const DenseOperator& a,
                                       double tol = kDefaultSupportTol);

/// Union of supp(s) over coefficients with |A_s| > tol (0-based sites).
std::set<int> support_of(const FourierOperator& f, double tol);
inline std::set<int> support_of(const FourierOperator& f) {
  return support_of(f, f.support_tol());
}

/**
 * 2^-|T| tr_T(A) tensor the identity on T: zeroes exactly the coefficients
 * whose support meets T. Contraction in ||.||_2 and ||.||_inf.
 */
FourierOperator partial_average(const FourierOperator& f,
                                const std::set<int>& sites);

}  // namespace qbfa
