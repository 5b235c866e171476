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

#include "qftmcu/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace qftmcu {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw ShapeError("CMatrix: entry count does not match rows*cols");
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("CMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ShapeError("CMatrix: product shape mismatch");
  CMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx a = (*this)(r, k);
      if (a == cplx{}) continue;
      const cplx* brow = &rhs.data_[k * rhs.cols_];
      cplx* orow = &out.data_[r * rhs.cols_];
      for (std::size_t c = 0; c < rhs.cols_; ++c) orow[c] += a * brow[c];
    }
  }
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ShapeError("CMatrix: sum shape mismatch");
  CMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ShapeError("CMatrix: difference shape mismatch");
  CMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

CMatrix CMatrix::operator*(cplx scalar) const {
  CMatrix out = *this;
  for (auto& v : out.data_) v *= scalar;
  return out;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t cap) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > cap || cols > cap) {
    throw DimensionError("kron: result dimension " + std::to_string(rows) +
                         " exceeds cap " + std::to_string(cap));
  }
  CMatrix out(rows, cols);
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cplx s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

double unitarity_defect(const CMatrix& m) {
  if (!m.square()) return std::numeric_limits<double>::infinity();
  return max_abs_diff(m.adjoint() * m, CMatrix::identity(m.rows()));
}

bool is_unitary(const CMatrix& m, double tol) {
  return unitarity_defect(m) <= tol;
}

PhaseEquivalence equal_up_to_global_phase(const CMatrix& a, const CMatrix& b,
                                          double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("equal_up_to_global_phase: shape mismatch");
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < b.data().size(); ++i) {
    const double mag = std::abs(b.data()[i]);
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  if (best_mag <= 0.0)
    throw std::invalid_argument("equal_up_to_global_phase: b is all zero");

  PhaseEquivalence out;
  out.phase = std::arg(a.data()[best] / b.data()[best]);
  const cplx rot = std::polar(1.0, out.phase);
  double dev = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    dev = std::max(dev, std::abs(a.data()[i] - rot * b.data()[i]));
  out.deviation = dev;
  out.equivalent = dev <= tol;
  return out;
}

// ---------------------------------------------------------------- Unitary2

namespace {

double defect2(const Unitary2::Entries& m) {
  // (M†M)_{rc} = Σ_k conj(M_kr) M_kc
  double d = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      cplx s = std::conj(m[r]) * m[c] + std::conj(m[2 + r]) * m[2 + c];
      if (r == c) s -= 1.0;
      d = std::max(d, std::abs(s));
    }
  return d;
}

}  // namespace

Unitary2::Unitary2(const Entries& m, double tol) : m_(m) {
  if (!(defect2(m_) <= tol))
    throw std::invalid_argument("Unitary2: matrix is not unitary");
}

Unitary2::Unitary2(const CMatrix& m, double tol) {
  if (m.rows() != 2 || m.cols() != 2)
    throw ShapeError("Unitary2: expected a 2x2 matrix");
  m_ = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
  if (!(defect2(m_) <= tol))
    throw std::invalid_argument("Unitary2: matrix is not unitary");
}

Unitary2 Unitary2::trusted(const Entries& m) { return Unitary2(m, TrustedTag{}); }

CMatrix Unitary2::matrix() const {
  return CMatrix(2, 2, {m_[0], m_[1], m_[2], m_[3]});
}

Unitary2 Unitary2::adjoint() const {
  return trusted({std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
                  std::conj(m_[3])});
}

Unitary2 Unitary2::operator*(const Unitary2& r) const {
  const auto& a = m_;
  const auto& b = r.m_;
  return trusted({a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                  a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]});
}

Unitary2 Unitary2::scaled(cplx phase) const {
  return trusted({phase * m_[0], phase * m_[1], phase * m_[2], phase * m_[3]});
}

double max_abs_diff(const Unitary2& a, const Unitary2& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);  // [−π, π]
  if (w <= -kPi + 1e-14) w += 2.0 * kPi;
  return w;
}

Eigen2 eig2(const Unitary2& u) {
  const cplx a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);
  const cplx tr = a + d;
  const cplx disc = std::sqrt(tr * tr - 4.0 * u.det());
  const cplx lambda = 0.5 * (tr + disc);

  // Null vector of (u − λI), from whichever row is better conditioned.
  std::array<cplx, 2> v1{b, lambda - a};
  std::array<cplx, 2> alt{lambda - d, c};
  if (std::norm(alt[0]) + std::norm(alt[1]) > std::norm(v1[0]) + std::norm(v1[1]))
    v1 = alt;
  double norm = std::sqrt(std::norm(v1[0]) + std::norm(v1[1]));
  if (norm < 1e-9) {
    // u is a multiple of the identity; any orthonormal basis works.
    v1 = {1.0, 0.0};
    norm = 1.0;
  }
  v1 = {v1[0] / norm, v1[1] / norm};
  std::array<cplx, 2> v2{-std::conj(v1[1]), std::conj(v1[0])};

  auto rayleigh = [&](const std::array<cplx, 2>& v) {
    const cplx w0 = a * v[0] + b * v[1];
    const cplx w1 = c * v[0] + d * v[1];
    return std::conj(v[0]) * w0 + std::conj(v[1]) * w1;
  };
  Eigen2 e;
  e.phases = {wrap_angle(std::arg(rayleigh(v1))), wrap_angle(std::arg(rayleigh(v2)))};
  e.vectors = {v1, v2};
  if (e.phases[1] < e.phases[0]) {
    std::swap(e.phases[0], e.phases[1]);
    std::swap(e.vectors[0], e.vectors[1]);
  }
  return e;
}

Unitary2 from_eigen(const Eigen2& e) {
  Unitary2::Entries m{};
  for (int k = 0; k < 2; ++k) {
    const cplx ph = std::polar(1.0, e.phases[k]);
    const auto& v = e.vectors[k];
    m[0] += ph * v[0] * std::conj(v[0]);
    m[1] += ph * v[0] * std::conj(v[1]);
    m[2] += ph * v[1] * std::conj(v[0]);
    m[3] += ph * v[1] * std::conj(v[1]);
  }
  return Unitary2::trusted(m);
}

namespace gates {

namespace {
const cplx I{0.0, 1.0};
}

Unitary2 identity() { return Unitary2(); }
Unitary2 x() { return Unitary2::trusted({0.0, 1.0, 1.0, 0.0}); }
Unitary2 y() { return Unitary2::trusted({0.0, -I, I, 0.0}); }
Unitary2 z() { return Unitary2::trusted({1.0, 0.0, 0.0, -1.0}); }
Unitary2 h() {
  const double r = 1.0 / std::sqrt(2.0);
  return Unitary2::trusted({r, r, r, -r});
}
Unitary2 s() { return Unitary2::trusted({1.0, 0.0, 0.0, I}); }
Unitary2 t() { return p(kPi / 4.0); }
Unitary2 sx() {
  return Unitary2::trusted({0.5 * (1.0 + I), 0.5 * (1.0 - I), 0.5 * (1.0 - I),
                            0.5 * (1.0 + I)});
}
Unitary2 rz(double g) {
  return Unitary2::trusted({std::polar(1.0, -g / 2), 0.0, 0.0, std::polar(1.0, g / 2)});
}
Unitary2 ry(double t) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  return Unitary2::trusted({c, -s, s, c});
}
Unitary2 rx(double g) {
  const double c = std::cos(g / 2), s = std::sin(g / 2);
  return Unitary2::trusted({c, -I * s, -I * s, c});
}
Unitary2 p(double g) {
  return Unitary2::trusted({1.0, 0.0, 0.0, std::polar(1.0, g)});
}

}  // namespace gates

}  // namespace qftmcu
