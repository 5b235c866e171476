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

#include <cstddef>
#include <vector>

#include "qftmcu/circuit.hpp"
#include "qftmcu/linalg.hpp"

namespace qftmcu {

inline constexpr int kUnitaryWidthCap = 12;
inline constexpr int kStateWidthCap = 22;

/// Amplitudes indexed by |a_n…a_1⟩ with wireline 1 least significant.
struct StateVector {
  int n = 0;
  std::vector<cplx> amplitudes;

  static StateVector basis(int n, std::size_t index);
  double norm() const;
};

/// Identity except on indices 2^{n-1}−1 and 2^n−1, where u acts on wireline n.
CMatrix mcu_oracle(const Unitary2& u, int n);

/// Product of gate embeddings in sequence order, times e^{i·global_phase}.
/// Throws DimensionError when the width exceeds `max_width`.
CMatrix circuit_unitary(const Circuit& c, int max_width = kUnitaryWidthCap);

StateVector apply_statevector(const Circuit& c, const StateVector& s,
                              int max_width = kStateWidthCap);

/// Permutation taking logical basis states to physical ones, where logical
/// wireline l sits at physical wireline layout[l-1].
CMatrix layout_permutation(const std::vector<int>& layout);

/// In-place application of one gate to `rows` = 2^n interleaved vectors of
/// length `stride` (stride 1 for a state, 2^n for a whole matrix).
void apply_gate(const Gate& g, cplx* data, int n, std::size_t stride);

struct Verdict {
  bool pass = false;
  double deviation = 0.0;
  double phase = 0.0;
};

/// Compares circuit_unitary(c), un-permuted by `layout` when given, with
/// mcu_oracle(u, c.n).
Verdict verify_against_oracle(const Circuit& c, const Unitary2& u,
                              const std::vector<int>& layout = {},
                              double tol = 1e-9);

}  // namespace qftmcu
