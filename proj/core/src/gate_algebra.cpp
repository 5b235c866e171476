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

#include "qftmcu/gate_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qftmcu/random.hpp"

namespace qftmcu {

Unitary2 reconstruct(const ZyzAngles& a) {
  return (gates::rz(a.alpha) * gates::ry(a.theta) * gates::rz(a.beta))
      .scaled(std::polar(1.0, a.delta));
}

ZyzAngles zyz_decompose(const Unitary2& u) {
  constexpr double kDegenerate = 1e-14;
  ZyzAngles out;
  out.delta = std::arg(u.det()) / 2.0;
  const cplx unphase = std::polar(1.0, -out.delta);
  const cplx a = unphase * u(0, 0);
  const cplx b = unphase * u(1, 0);
  const double abs_a = std::abs(a), abs_b = std::abs(b);
  if (abs_b <= kDegenerate) {
    out.theta = 0.0;
    out.beta = 0.0;
    out.alpha = -2.0 * std::arg(a) + 0.0;
  } else if (abs_a <= kDegenerate) {
    out.theta = kPi;
    out.alpha = 0.0;
    out.beta = -2.0 * std::arg(b) + 0.0;
  } else {
    out.theta = 2.0 * std::atan2(abs_b, abs_a);
    out.alpha = std::arg(b) - std::arg(a);
    out.beta = -std::arg(a) - std::arg(b);
  }
  return out;
}

AbcDecomposition abc_decompose(const Unitary2& u) {
  AbcDecomposition d;
  d.angles = zyz_decompose(u);
  d.delta = d.angles.delta;
  const double al = d.angles.alpha, th = d.angles.theta, be = d.angles.beta;
  d.abc.a = gates::rz(al) * gates::ry(th / 2.0);
  d.abc.b = gates::ry(-th / 2.0) * gates::rz(-(al + be) / 2.0);
  d.abc.c = gates::rz((be - al) / 2.0);
  return d;
}

Unitary2 root(const Unitary2& u, int m) {
  if (m < 1) throw std::invalid_argument("root: m must be >= 1");
  if (m == 1) return u;
  Eigen2 e = eig2(u);
  const double scale = std::ldexp(1.0, -(m - 1));
  for (auto& ph : e.phases) ph *= scale;
  return from_eigen(e);
}

Unitary2 special_part(const Unitary2& u, double* delta) {
  const double d = std::arg(u.det()) / 2.0;
  if (delta) *delta = d;
  return u.scaled(std::polar(1.0, -d));
}

// ------------------------------------------------------------ identities

namespace {

// Two-qubit operators are written |a_p⟩ ⊗ |a_q⟩ with the control p as the
// left (more significant) factor.
CMatrix controlled(const Unitary2& u) {
  CMatrix m = CMatrix::identity(4);
  m(2, 2) = u(0, 0);
  m(2, 3) = u(0, 1);
  m(3, 2) = u(1, 0);
  m(3, 3) = u(1, 1);
  return m;
}

CMatrix on_target(const Unitary2& u) { return kron(CMatrix::identity(2), u.matrix()); }
CMatrix on_control(const Unitary2& u) { return kron(u.matrix(), CMatrix::identity(2)); }

double dev(const Unitary2& a, const Unitary2& b) { return max_abs_diff(a, b); }
double dev(const CMatrix& a, const CMatrix& b) { return max_abs_diff(a, b); }

}  // namespace

std::vector<IdentityResult> identity_battery(std::uint64_t seed, int draws) {
  using namespace gates;
  Rng rng(seed);
  std::vector<IdentityResult> out;
  auto record = [&](std::string name, auto&& one_draw) {
    IdentityResult r{std::move(name), 0.0, draws};
    for (int k = 0; k < draws; ++k) r.max_deviation = std::max(r.max_deviation, one_draw());
    out.push_back(std::move(r));
  };

  record("R_m = P(pi/2^(m-1)) = Z^(1/2^(m-1))", [&] {
    const int m = static_cast<int>(rng.uniform_int(1, 16));
    const double g = kPi / std::ldexp(1.0, m - 1);
    const Unitary2 explicit_form =
        Unitary2::trusted({1.0, 0.0, 0.0, std::polar(1.0, 2.0 * kPi / std::ldexp(1.0, m))});
    return std::max(dev(p(g), root(z(), m)), dev(p(g), explicit_form));
  });

  record("P(g) X P(-g) = Rz(g) X Rz(-g)", [&] {
    const double g = rng.uniform(-2.0 * kPi, 2.0 * kPi);
    return dev(p(g) * x() * p(-g), rz(g) * x() * rz(-g));
  });

  record("C-R_m = C-Rz(pi/2^(m-1)) (P(pi/2^m) x I)", [&] {
    const int m = static_cast<int>(rng.uniform_int(1, 16));
    const double half = kPi / std::ldexp(1.0, m);
    const CMatrix cx = controlled(x());
    const CMatrix with_p = on_target(p(half)) * cx * on_target(p(-half)) * cx * on_control(p(half));
    const CMatrix with_rz = on_target(rz(half)) * cx * on_target(rz(-half)) * cx * on_control(p(half));
    const CMatrix crz_form = controlled(rz(2.0 * half)) * on_control(p(half));
    const CMatrix cp = controlled(p(2.0 * half));
    return std::max({dev(with_p, cp), dev(with_rz, cp), dev(crz_form, cp)});
  });

  record("X P(-d/2) X P(d/2) = Rz(d) = e^(-id/2) P(d)", [&] {
    const double d = rng.uniform(-2.0 * kPi, 2.0 * kPi);
    const Unitary2 lhs = x() * p(-d / 2) * x() * p(d / 2);
    return std::max(dev(lhs, rz(d)), dev(lhs, p(d).scaled(std::polar(1.0, -d / 2))));
  });

  record("P(d/2) X P(-d/2) X = Rz(d)", [&] {
    const double d = rng.uniform(-2.0 * kPi, 2.0 * kPi);
    return dev(p(d / 2) * x() * p(-d / 2) * x(), rz(d));
  });

  record("C-U(2)^(1/2^(m-1)) = C-U^(1/2^(m-1)) (P(d/2^(m-1)) x I)", [&] {
    const Unitary2 u2 = haar_unitary(rng);
    const int m = static_cast<int>(rng.uniform_int(1, 8));
    double d = 0.0;
    const Unitary2 v = special_part(u2, &d);
    const double phase = d / std::ldexp(1.0, m - 1);
    const Unitary2 w = root(v, m);
    const Unitary2 u2_root = w.scaled(std::polar(1.0, phase));
    // u2_root is a genuine 2^(m-1)-th root of the U(2) gate.
    Unitary2 pow = u2_root;
    for (int k = 1; k < (1 << (m - 1)); ++k) pow = pow * u2_root;
    const double root_dev = dev(pow, u2);
    const double split_dev =
        dev(controlled(u2_root), controlled(w) * on_control(p(phase)));
    return std::max(root_dev, split_dev);
  });

  record("H Z H = X", [&] { return dev(h() * z() * h(), x()); });

  record("H Rx(g) H = Rz(g)", [&] {
    const double g = rng.uniform(-2.0 * kPi, 2.0 * kPi);
    return dev(h() * rx(g) * h(), rz(g));
  });
  return out;
}

}  // namespace qftmcu
