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

#include <cstdint>
#include <string>
#include <vector>

#include "qftmcu/linalg.hpp"

namespace qftmcu {

/// U = e^{iδ}·Rz(α)·Ry(θ)·Rz(β).
struct ZyzAngles {
  double delta = 0.0;
  double alpha = 0.0;
  double theta = 0.0;
  double beta = 0.0;
};

Unitary2 reconstruct(const ZyzAngles& a);

/// θ lands in [0, π] and δ in (−π/2, π/2]. A diagonal input gets θ = β = 0;
/// an antidiagonal one gets θ = π, α = 0.
ZyzAngles zyz_decompose(const Unitary2& u);

/// A·B·C = I and U = e^{iδ}·A·X·B·X·C.
struct AbcTriple {
  Unitary2 a;
  Unitary2 b;
  Unitary2 c;
};

struct AbcDecomposition {
  double delta = 0.0;
  ZyzAngles angles;
  AbcTriple abc;
};

AbcDecomposition abc_decompose(const Unitary2& u);

/// Principal 2^{m−1}-th root: eigenphases on (−π, π] divided by 2^{m−1}.
/// root(u, 1) == u. Throws std::invalid_argument for m < 1.
Unitary2 root(const Unitary2& u, int m);

/// Strips the determinant phase: returns V = e^{−iδ}·u with det V = 1, δ from
/// zyz_decompose.
Unitary2 special_part(const Unitary2& u, double* delta = nullptr);

struct IdentityResult {
  std::string name;
  double max_deviation = 0.0;
  int draws = 0;
};

/// Evaluates the gate identities the constructions rely on at seeded random
/// parameters and reports the worst deviation for each.
std::vector<IdentityResult> identity_battery(std::uint64_t seed = 1,
                                             int draws = 100);

}  // namespace qftmcu
