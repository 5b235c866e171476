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

#include "qftmcu/random.hpp"

#include <cmath>

#include "qftmcu/gate_algebra.hpp"

namespace qftmcu {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

Unitary2 haar_unitary(Rng& rng) {
  std::array<cplx, 4> g;
  for (auto& v : g) v = cplx(rng.normal(), rng.normal());
  // Column 0.
  double n0 = std::sqrt(std::norm(g[0]) + std::norm(g[2]));
  const cplx a0 = g[0] / n0, a1 = g[2] / n0;
  // Column 1 orthogonalized against column 0.
  const cplx proj = std::conj(a0) * g[1] + std::conj(a1) * g[3];
  cplx b0 = g[1] - proj * a0, b1 = g[3] - proj * a1;
  const double n1 = std::sqrt(std::norm(b0) + std::norm(b1));
  b0 /= n1;
  b1 /= n1;
  return Unitary2({a0, b0, a1, b1});
}

namespace {

double rational_angle(Rng& rng) {
  const auto q = rng.uniform_int(1, 16);
  const auto p = rng.uniform_int(-16, 16);
  return kPi * static_cast<double>(p) / static_cast<double>(q);
}

bool near_trivial(const Unitary2& u) {
  for (const auto& g : {gates::identity(), gates::x(), gates::z()}) {
    if (equal_up_to_global_phase(u.matrix(), g.matrix(), 1e-6).equivalent)
      return true;
  }
  return false;
}

}  // namespace

Unitary2 random_rational_unitary(Rng& rng, bool special) {
  while (true) {
    ZyzAngles a;
    a.alpha = rational_angle(rng);
    a.theta = rational_angle(rng);
    a.beta = rational_angle(rng);
    a.delta = special ? 0.0 : rational_angle(rng);
    const Unitary2 u = reconstruct(a);
    if (!near_trivial(u)) return u;
  }
}

}  // namespace qftmcu
