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

#include "qftmcu/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qftmcu {

StateVector StateVector::basis(int n, std::size_t index) {
  StateVector s;
  s.n = n;
  s.amplitudes.assign(std::size_t{1} << n, cplx{0.0});
  s.amplitudes.at(index) = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const cplx& a : amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

CMatrix mcu_oracle(const Unitary2& u, int n) {
  if (n < 2) throw std::invalid_argument("mcu_oracle: n must be at least 2");
  if (n > kUnitaryWidthCap) throw DimensionError("mcu_oracle: n exceeds the dimension cap");
  const std::size_t dim = std::size_t{1} << n;
  CMatrix m = CMatrix::identity(dim);
  const std::size_t lo = (dim >> 1) - 1, hi = dim - 1;
  m(lo, lo) = u(0, 0);
  m(lo, hi) = u(0, 1);
  m(hi, lo) = u(1, 0);
  m(hi, hi) = u(1, 1);
  return m;
}

namespace {

// Row r of the register is the slice data[r*stride, (r+1)*stride).
inline void mix_rows(cplx* a, cplx* b, std::size_t stride, const Unitary2& u) {
  const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::size_t k = 0; k < stride; ++k) {
    const cplx x = a[k], y = b[k];
    a[k] = u00 * x + u01 * y;
    b[k] = u10 * x + u11 * y;
  }
}

inline void scale_row(cplx* a, std::size_t stride, cplx f) {
  for (std::size_t k = 0; k < stride; ++k) a[k] *= f;
}

}  // namespace

void apply_gate(const Gate& g, cplx* data, int n, std::size_t stride) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t tbit = std::size_t{1} << (g.target - 1);
  if (g.kind == GateKind::SWAP) {
    const std::size_t obit = std::size_t{1} << (*g.control - 1);
    for (std::size_t r = 0; r < dim; ++r)
      if ((r & tbit) && !(r & obit)) {
        cplx* a = data + r * stride;
        cplx* b = data + (r ^ tbit ^ obit) * stride;
        for (std::size_t k = 0; k < stride; ++k) std::swap(a[k], b[k]);
      }
    return;
  }
  const std::size_t cmask = g.control ? std::size_t{1} << (*g.control - 1) : 0;
  const Unitary2 u = g.base();
  const bool diagonal = u(0, 1) == cplx{0.0} && u(1, 0) == cplx{0.0};
  for (std::size_t r = 0; r < dim; ++r) {
    if ((r & tbit) || (r & cmask) != cmask) continue;
    cplx* a = data + r * stride;
    cplx* b = data + (r | tbit) * stride;
    if (diagonal) {
      if (u(0, 0) != cplx{1.0}) scale_row(a, stride, u(0, 0));
      if (u(1, 1) != cplx{1.0}) scale_row(b, stride, u(1, 1));
    } else {
      mix_rows(a, b, stride, u);
    }
  }
}

CMatrix circuit_unitary(const Circuit& c, int max_width) {
  if (c.n > max_width)
    throw DimensionError("circuit_unitary: width " + std::to_string(c.n) +
                         " exceeds cap " + std::to_string(max_width) +
                         "; use apply_statevector instead");
  const std::size_t dim = std::size_t{1} << c.n;
  CMatrix m = CMatrix::identity(dim);
  for (const Gate& g : c.gates) apply_gate(g, m.data().data(), c.n, dim);
  if (c.global_phase != 0.0) m = m * std::polar(1.0, c.global_phase);
  return m;
}

StateVector apply_statevector(const Circuit& c, const StateVector& s, int max_width) {
  if (s.n != c.n) throw std::invalid_argument("apply_statevector: width mismatch");
  if (c.n > max_width) throw DimensionError("apply_statevector: width exceeds cap");
  StateVector out = s;
  for (const Gate& g : c.gates) apply_gate(g, out.amplitudes.data(), c.n, 1);
  if (c.global_phase != 0.0)
    for (cplx& a : out.amplitudes) a *= std::polar(1.0, c.global_phase);
  return out;
}

CMatrix layout_permutation(const std::vector<int>& layout) {
  const int n = static_cast<int>(layout.size());
  if (n > kUnitaryWidthCap) throw DimensionError("layout_permutation: width exceeds cap");
  const std::size_t dim = std::size_t{1} << n;
  CMatrix p(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    std::size_t b = 0;
    for (int l = 0; l < n; ++l)
      if (a >> l & 1) b |= std::size_t{1} << (layout[l] - 1);
    p(b, a) = 1.0;
  }
  return p;
}

Verdict verify_against_oracle(const Circuit& c, const Unitary2& u,
                              const std::vector<int>& layout, double tol) {
  CMatrix m = circuit_unitary(c);
  if (!layout.empty()) {
    if (static_cast<int>(layout.size()) != c.n)
      throw std::invalid_argument("verify_against_oracle: layout size mismatch");
    // Row a of P†·m is row b(a) of m, where b maps logical to physical bits.
    const std::size_t dim = m.rows();
    CMatrix un(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
      std::size_t b = 0;
      for (int l = 0; l < c.n; ++l)
        if (a >> l & 1) b |= std::size_t{1} << (layout[l] - 1);
      std::copy_n(&m(b, 0), dim, &un(a, 0));
    }
    m = std::move(un);
  }
  const PhaseEquivalence eq = equal_up_to_global_phase(m, mcu_oracle(u, c.n), tol);
  return {eq.equivalent, eq.deviation, eq.phase};
}

}  // namespace qftmcu
