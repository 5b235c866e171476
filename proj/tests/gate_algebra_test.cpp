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


#include <cmath>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace qftmcu {
namespace {

Unitary2 power(const Unitary2& u, int k) {
  Unitary2 r = gates::identity();
  for (int i = 0; i < k; ++i) r = r * u;
  return r;
}

CMatrix controlled(const Unitary2& u) {
  CMatrix m = CMatrix::identity(4);
  m(2, 2) = u(0, 0);
  m(2, 3) = u(0, 1);
  m(3, 2) = u(1, 0);
  m(3, 3) = u(1, 1);
  return m;
}

TEST(Zyz, Identity) {
  const ZyzAngles a = zyz_decompose(gates::identity());
  EXPECT_EQ(a.delta, 0.0);
  EXPECT_EQ(a.alpha, 0.0);
  EXPECT_EQ(a.theta, 0.0);
  EXPECT_EQ(a.beta, 0.0);
}

TEST(Zyz, PauliX) {
  const ZyzAngles a = zyz_decompose(gates::x());
  EXPECT_LE(max_abs_diff(reconstruct(a), gates::x()), 1e-12);
  EXPECT_NEAR(a.theta, kPi, 1e-15);
  EXPECT_EQ(a.alpha, 0.0);
}

TEST(Zyz, DiagonalTieBreak) {
  const ZyzAngles a = zyz_decompose(gates::t());
  EXPECT_EQ(a.theta, 0.0);
  EXPECT_EQ(a.beta, 0.0);
  EXPECT_LE(max_abs_diff(reconstruct(a), gates::t()), 1e-12);
}

TEST(Zyz, RandomReconstruction) {
  Rng rng(31);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Unitary2 u = haar_unitary(rng);
    const ZyzAngles a = zyz_decompose(u);
    worst = std::max(worst, max_abs_diff(reconstruct(a), u));
    EXPECT_GE(a.theta, 0.0);
    EXPECT_LE(a.theta, kPi);
    EXPECT_GT(a.delta, -kPi);
    EXPECT_LE(a.delta, kPi);
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(Zyz, RecoversCanonicalAngles) {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const ZyzAngles in{rng.uniform(-kPi / 2 + 0.01, kPi / 2), rng.uniform(-kPi + 0.01, kPi),
                       rng.uniform(0.01, kPi - 0.01), rng.uniform(-kPi + 0.01, kPi)};
    const ZyzAngles out = zyz_decompose(reconstruct(in));
    EXPECT_NEAR(out.theta, in.theta, 1e-10);
    EXPECT_NEAR(out.delta, in.delta, 1e-10);
    EXPECT_NEAR(std::abs(wrap_angle(out.alpha - in.alpha)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(wrap_angle(out.beta - in.beta)), 0.0, 1e-10);
  }
}

TEST(Abc, Identity) {
  const AbcDecomposition d = abc_decompose(gates::identity());
  EXPECT_EQ(d.delta, 0.0);
  EXPECT_LE(max_abs_diff(d.abc.a, gates::identity()), 1e-15);
  EXPECT_LE(max_abs_diff(d.abc.b, gates::identity()), 1e-15);
  EXPECT_LE(max_abs_diff(d.abc.c, gates::identity()), 1e-15);
}

void expect_abc(const Unitary2& u) {
  const AbcDecomposition d = abc_decompose(u);
  const auto& [a, b, c] = d.abc;
  EXPECT_LE(max_abs_diff(a * b * c, gates::identity()), 1e-12);
  const Unitary2 rebuilt = (a * gates::x() * b * gates::x() * c).scaled(std::polar(1.0, d.delta));
  EXPECT_LE(max_abs_diff(rebuilt, u), 1e-12);
  const ZyzAngles& z = d.angles;
  EXPECT_LE(max_abs_diff(a, gates::rz(z.alpha) * gates::ry(z.theta / 2)), 1e-12);
  EXPECT_LE(max_abs_diff(b, gates::ry(-z.theta / 2) * gates::rz(-(z.alpha + z.beta) / 2)), 1e-12);
  EXPECT_LE(max_abs_diff(c, gates::rz((z.beta - z.alpha) / 2)), 1e-12);
}

TEST(Abc, PauliX) { expect_abc(gates::x()); }

TEST(Abc, RandomUnitaries) {
  Rng rng(33);
  for (int i = 0; i < 1000; ++i) expect_abc(haar_unitary(rng));
}

TEST(Abc, SpecialUnitaryHasTrivialPhase) {
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    const Unitary2 u = special_part(haar_unitary(rng));
    EXPECT_NEAR(std::abs(u.det() - 1.0), 0.0, 1e-12);
    const double delta = abc_decompose(u).delta;
    // e^{2iδ} = 1.
    EXPECT_NEAR(std::abs(std::polar(1.0, 2 * delta) - 1.0), 0.0, 1e-12);
    expect_abc(u);
  }
}

TEST(Root, ZSquareRootIsS) {
  EXPECT_LE(max_abs_diff(root(gates::z(), 2), gates::s()), 1e-15);
}

TEST(Root, XSquareRootIsSX) {
  const Unitary2 r = root(gates::x(), 2);
  const Unitary2 sx({cplx{0.5, 0.5}, cplx{0.5, -0.5}, cplx{0.5, -0.5}, cplx{0.5, 0.5}});
  EXPECT_LE(max_abs_diff(r, sx), 1e-15);
  EXPECT_LE(max_abs_diff(r * r, gates::x()), 1e-15);
}

TEST(Root, FirstRootIsInput) {
  const Unitary2 u = testing::draws(1, 1)[0];
  EXPECT_LE(max_abs_diff(root(u, 1), u), 0.0);
  EXPECT_THROW(root(u, 0), std::invalid_argument);
}

TEST(Root, PowersBack) {
  Rng rng(35);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Unitary2 u = haar_unitary(rng);
    worst = std::max(worst, max_abs_diff(power(root(u, 5), 16), u));
    for (int m = 2; m <= 6; ++m) {
      const Unitary2 r = root(u, m);
      EXPECT_LE(max_abs_diff(r * r, root(u, m - 1)), 1e-11);
    }
  }
  EXPECT_LE(worst, 1e-11);
}

TEST(Battery, AllIdentitiesHold) {
  const auto results = identity_battery();
  EXPECT_EQ(results.size(), 8u);
  for (const auto& r : results) {
    EXPECT_EQ(r.draws, 100) << r.name;
    EXPECT_LE(r.max_deviation, 1e-12) << r.name;
  }
}

TEST(Battery, PhaseLadderIdentityAtPi) {
  const Unitary2 lhs = gates::x() * gates::p(-kPi / 2) * gates::x() * gates::p(kPi / 2);
  const Unitary2 expected = Unitary2::trusted({std::polar(1.0, -kPi / 2), 0.0, 0.0, std::polar(1.0, kPi / 2)});
  EXPECT_LE(max_abs_diff(lhs, expected), 1e-15);
  EXPECT_LE(max_abs_diff(lhs, gates::rz(kPi)), 1e-15);
}

TEST(Battery, HadamardConjugatesZToX) {
  EXPECT_LE(max_abs_diff(gates::h() * gates::z() * gates::h(), gates::x()), 1e-15);
}

TEST(Battery, ControlledPhaseAtM3) {
  // C-R_3 = C-Rz(π/4)·(P(π/8) ⊗ I), control as the left factor.
  const CMatrix lhs = controlled(gates::p(kPi / 4));
  const CMatrix rhs = controlled(gates::rz(kPi / 4)) * kron(gates::p(kPi / 8).matrix(), CMatrix::identity(2));
  EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12);
}

TEST(SpecialPart, StripsDeterminantPhase) {
  const Unitary2 u = gates::t();
  double delta = 0.0;
  const Unitary2 v = special_part(u, &delta);
  EXPECT_NEAR(std::abs(v.det() - 1.0), 0.0, 1e-15);
  EXPECT_LE(max_abs_diff(v.scaled(std::polar(1.0, delta)), u), 1e-15);
  EXPECT_NEAR(delta, kPi / 8, 1e-15);
}

}  // namespace
}  // namespace qftmcu
