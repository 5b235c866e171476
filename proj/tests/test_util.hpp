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


// Small helpers shared by the unit tests.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qftmcu/qftmcu.hpp"

namespace qftmcu::testing {

/// Matrix of |a⟩ → |a + shift mod 2^k⟩, built entry by entry.
inline CMatrix cyclic_shift(int k, int shift) {
  const std::size_t dim = std::size_t{1} << k;
  CMatrix m(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    const long long d = static_cast<long long>(dim);
    const long long b = ((static_cast<long long>(a) + shift) % d + d) % d;
    m(static_cast<std::size_t>(b), a) = 1.0;
  }
  return m;
}

inline SynthConfig config(Method m, int n, const Unitary2& u = gates::x(), bool optimize = true) {
  SynthConfig c;
  c.method = m;
  c.n = n;
  c.u = u;
  c.optimize = optimize;
  return c;
}

/// Fixed random U(2) draws for a test.
inline std::vector<Unitary2> draws(std::uint64_t seed, int count, bool special = false) {
  Rng rng(seed);
  std::vector<Unitary2> v;
  for (int i = 0; i < count; ++i) v.push_back(random_rational_unitary(rng, special));
  return v;
}

/// Unitary of a routed circuit with the final layout undone.
inline CMatrix logical_unitary(const RouteResult& r) {
  return layout_permutation(r.final_layout).adjoint() * circuit_unitary(r.circuit);
}

inline double phase_deviation(const CMatrix& a, const CMatrix& b) {
  return equal_up_to_global_phase(a, b, 1e-9).deviation;
}

}  // namespace qftmcu::testing
