// Copyright 2026 The qftmcu Authors
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

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qftmcu {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kPredicateTol = 1e-10;
inline constexpr double kIdentityTol = 1e-12;

/// Default cap on matrix rows for dense unitary builds (2^12).
inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 12;

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t dim);
  static CMatrix zeros(std::size_t rows, std::size_t cols) {
    return CMatrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  CMatrix adjoint() const;
  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix operator+(const CMatrix& rhs) const;
  CMatrix operator-(const CMatrix& rhs) const;
  CMatrix operator*(cplx scalar) const;

  /// Largest absolute entry.
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

inline CMatrix operator*(cplx scalar, const CMatrix& m) { return m * scalar; }

/// ‖a − b‖_max. Throws ShapeError on mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Kronecker product a ⊗ b; the result's row count must not exceed `cap`.
CMatrix kron(const CMatrix& a, const CMatrix& b,
             std::size_t cap = kDefaultDimensionCap);

/// ‖M†M − I‖_max.
double unitarity_defect(const CMatrix& m);
bool is_unitary(const CMatrix& m, double tol = kPredicateTol);

struct PhaseEquivalence {
  bool equivalent = false;
  /// φ with a ≈ e^{iφ} b, taken from the largest-magnitude entry of b.
  double phase = 0.0;
  /// ‖a − e^{iφ} b‖_max for that φ.
  double deviation = 0.0;
};

PhaseEquivalence equal_up_to_global_phase(const CMatrix& a, const CMatrix& b,
                                          double tol = kPredicateTol);

/// A certified 2×2 unitary. Entries are stored row-major as {m00, m01, m10, m11}.
class Unitary2 {
 public:
  using Entries = std::array<cplx, 4>;

  Unitary2() : m_{cplx{1}, cplx{0}, cplx{0}, cplx{1}} {}
  /// Throws std::invalid_argument unless the entries form a unitary within tol.
  explicit Unitary2(const Entries& m, double tol = kPredicateTol);
  explicit Unitary2(const CMatrix& m, double tol = kPredicateTol);

  /// Skips the unitarity check. For products of values already known unitary.
  static Unitary2 trusted(const Entries& m);

  const Entries& entries() const { return m_; }
  cplx operator()(int r, int c) const { return m_[r * 2 + c]; }

  CMatrix matrix() const;
  Unitary2 adjoint() const;
  Unitary2 operator*(const Unitary2& rhs) const;
  Unitary2 scaled(cplx phase) const;
  cplx det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

 private:
  struct TrustedTag {};
  Unitary2(const Entries& m, TrustedTag) : m_(m) {}
  Entries m_;
};

double max_abs_diff(const Unitary2& a, const Unitary2& b);

struct Eigen2 {
  /// Eigenphases in (−π, π], ascending.
  std::array<double, 2> phases{};
  /// Orthonormal eigenvectors, vectors[k] pairs with phases[k].
  std::array<std::array<cplx, 2>, 2> vectors{};
};

/// Spectral decomposition u = V·diag(e^{iλ₁}, e^{iλ₂})·V†.
Eigen2 eig2(const Unitary2& u);

/// Rebuilds V·diag(e^{iλ})·V† from an eigendecomposition.
Unitary2 from_eigen(const Eigen2& e);

/// Wraps an angle into (−π, π].
double wrap_angle(double a);

namespace gates {
Unitary2 identity();
Unitary2 x();
Unitary2 y();
Unitary2 z();
Unitary2 h();
Unitary2 s();
Unitary2 t();
Unitary2 sx();
/// diag(e^{−iγ/2}, e^{iγ/2})
Unitary2 rz(double gamma);
/// [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]]
Unitary2 ry(double theta);
/// [[cos γ/2, −i sin γ/2], [−i sin γ/2, cos γ/2]]
Unitary2 rx(double gamma);
/// diag(1, e^{iγ})
Unitary2 p(double gamma);
}  // namespace gates

}  // namespace qftmcu
