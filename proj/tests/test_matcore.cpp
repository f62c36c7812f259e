// Copyright 2026 The opent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "opent/matcore.hpp"
#include "opent/random.hpp"
#include "oracles/scalar_oracle.hpp"

using namespace opent;

namespace {

CMatrix diag(std::initializer_list<double> d) { return HermitianMatrix::diagonal(d).matrix(); }

PositiveDefiniteMatrix pd_diag(std::initializer_list<double> d) {
  return PositiveDefiniteMatrix(HermitianMatrix::diagonal(d));
}

}  // namespace

TEST(Hermitian, SymmetrizesOnConstruction) {
  CMatrix m(2, 2);
  m << Complex(1, 0), Complex(2, 1), Complex(0, 0), Complex(3, 0);
  const HermitianMatrix h(m);
  EXPECT_NEAR(std::abs(h(0, 1) - std::conj(h(1, 0))), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(h(0, 1).real(), 1.0);
}

TEST(Hermitian, RejectsBadShapes) {
  EXPECT_THROW(HermitianMatrix(CMatrix(2, 3)), ShapeError);
  EXPECT_THROW(HermitianMatrix(CMatrix(0, 0)), ShapeError);
}

TEST(Eig, DiagonalInput) {
  const auto s = eig(HermitianMatrix::diagonal({3.0, 1.0}));
  EXPECT_DOUBLE_EQ(s.eigenvalues(0), 1.0);
  EXPECT_DOUBLE_EQ(s.eigenvalues(1), 3.0);
  EXPECT_NEAR(std::abs(s.eigenvectors(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s.eigenvectors(0, 1)), 1.0, 1e-15);
}

TEST(Eig, SwapMatrix) {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  const auto s = eig(HermitianMatrix(m));
  EXPECT_NEAR(s.eigenvalues(0), -1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues(1), 1.0, 1e-14);
}

TEST(Eig, RandomResidualsAndEigenOracle) {
  Rng rng(11);
  for (int n : {1, 2, 5, 9, 16, 40}) {
    const auto h = random_hermitian(rng, n);
    const auto s = eig(h);
    EXPECT_LE((s.reconstruct() - h.matrix()).norm(), 1e-10 * std::max(1.0, h.frobenius_norm()));
    EXPECT_LE((s.eigenvectors.adjoint() * s.eigenvectors - CMatrix::Identity(n, n)).norm(), 1e-11);
    const auto ref = oracle::eigenvalues(h.matrix());
    EXPECT_LE((s.eigenvalues - ref).cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, ref.cwiseAbs().maxCoeff()));
    for (int i = 1; i < n; ++i) EXPECT_LE(s.eigenvalues(i - 1), s.eigenvalues(i));
  }
}

TEST(Eig, RepeatedEigenvalues) {
  Rng rng(3);
  const CMatrix u = random_unitary(rng, 6);
  const CMatrix h = u * diag({2, 2, 2, 5, 5, -1}) * u.adjoint();
  const auto s = eig(HermitianMatrix(h));
  EXPECT_NEAR(s.eigenvalues(0), -1.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues(3), 2.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues(5), 5.0, 1e-12);
  EXPECT_LE((s.reconstruct() - h).norm(), 1e-10 * h.norm());
}

TEST(ApplyFunction, CatalogValues) {
  const auto a = pd_diag({1.0, std::numbers::e});
  const auto l = apply_function(a, ScalarFunction::log());
  EXPECT_NEAR((l.matrix() - diag({0.0, 1.0})).norm(), 0.0, 1e-15);
  const auto r = apply_function(pd_diag({4.0, 9.0}), ScalarFunction::power(0.5));
  EXPECT_NEAR((r.matrix() - diag({2.0, 3.0})).norm(), 0.0, 1e-15);
}

TEST(ApplyFunction, IdentityAndCommutation) {
  Rng rng(5);
  const auto a = random_pd(rng, 5);
  const auto id = apply_function(a, ScalarFunction::identity());
  EXPECT_LE(relative_frobenius_error(id.matrix(), a.matrix()), 1e-12);
  const auto l = apply_function(a, ScalarFunction::log());
  const CMatrix comm = l.matrix() * a.matrix() - a.matrix() * l.matrix();
  EXPECT_LE(comm.norm(), 1e-10 * l.frobenius_norm() * a.hermitian().frobenius_norm());
}

TEST(ApplyFunction, DomainErrorNamesEigenvalue) {
  CMatrix m = diag({-1.0, 2.0});
  const auto s = eig(HermitianMatrix(m));
  try {
    (void)apply_function(s, ScalarFunction::log());
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("-1"), std::string::npos);
  }
}

TEST(PositiveDefinite, RejectsSingularAndIndefinite) {
  EXPECT_THROW(PositiveDefiniteMatrix(HermitianMatrix::diagonal({1.0, 0.0})), DomainError);
  EXPECT_THROW(PositiveDefiniteMatrix(HermitianMatrix::diagonal({1.0, -2.0})), DomainError);
  EXPECT_THROW(PositiveDefiniteMatrix(HermitianMatrix::diagonal({1.0, 1e-13})), DomainError);
  EXPECT_NO_THROW(PositiveDefiniteMatrix(HermitianMatrix::diagonal({1.0, 1e-11})));
}

TEST(HalfPowers, DiagonalExample) {
  const auto hp = half_powers(pd_diag({4.0, 16.0}));
  EXPECT_NEAR((hp.sqrt.matrix() - diag({2, 4})).norm(), 0.0, 1e-15);
  EXPECT_NEAR((hp.inv_sqrt.matrix() - diag({0.5, 0.25})).norm(), 0.0, 1e-15);
  EXPECT_NEAR((hp.inverse.matrix() - diag({0.25, 1.0 / 16})).norm(), 0.0, 1e-15);
  const auto id = half_powers(PositiveDefiniteMatrix::identity(3));
  EXPECT_NEAR((id.sqrt.matrix() - CMatrix::Identity(3, 3)).norm(), 0.0, 1e-15);
}

TEST(HalfPowers, RandomResiduals) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_pd(rng, 4);
    const auto hp = half_powers(a);
    EXPECT_LE(relative_frobenius_error(hp.sqrt.matrix() * hp.sqrt.matrix(), a.matrix()), 1e-10);
    EXPECT_LE(relative_frobenius_error(hp.sqrt.matrix() * hp.inv_sqrt.matrix(),
                                       CMatrix::Identity(4, 4)),
              1e-10);
  }
}

TEST(Congruence, Examples) {
  Rng rng(2);
  const auto x = random_hermitian(rng, 3);
  EXPECT_LE((congruence(CMatrix::Identity(3, 3), x).matrix() - x.matrix()).norm(), 1e-15);
  EXPECT_LE((congruence(2.0 * CMatrix::Identity(3, 3), x).matrix() - 4.0 * x.matrix()).norm(),
            1e-13);
  const CMatrix u = random_unitary(rng, 2);
  const auto s = eig(congruence(u, HermitianMatrix::diagonal({1.0, 2.0})));
  EXPECT_NEAR(s.eigenvalues(0), 1.0, 1e-13);
  EXPECT_NEAR(s.eigenvalues(1), 2.0, 1e-13);
  EXPECT_THROW((void)congruence(CMatrix::Identity(2, 2), x), ShapeError);
}

TEST(Congruence, PreservesPositivity) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_pd(rng, 4, 0.0 + 1e-3);
    const CMatrix c = random_ginibre(rng, 4, 3);
    EXPECT_GE(lambda_min(congruence(c, x)), -1e-10);
  }
}

TEST(Loewner, Examples) {
  auto r = loewner_leq(HermitianMatrix::identity(2), 2.0 * HermitianMatrix::identity(2));
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.margin, 1.0, 1e-15);
  r = loewner_leq(HermitianMatrix::diagonal({1, 3}), HermitianMatrix::diagonal({2, 2}));
  EXPECT_FALSE(r.holds);
  EXPECT_NEAR(r.margin, -1.0, 1e-15);
  Rng rng(4);
  const auto a = random_hermitian(rng, 5);
  r = loewner_leq(a, a);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.margin, 0.0, 1e-14);
  EXPECT_THROW((void)loewner_leq(a, HermitianMatrix::identity(2)), ShapeError);
}

TEST(Loewner, ToleranceScalesWithNorms) {
  const auto a = HermitianMatrix::diagonal({1e6, 1.0});
  const auto b = HermitianMatrix::diagonal({1e6 - 1e-4, 1.0});
  EXPECT_TRUE(loewner_leq(a, b, 1e-9).holds);  // -1e-4 >= -1e-9 * 1e6
  EXPECT_FALSE(loewner_leq(a, b, 1e-11).holds);
}

TEST(Sandwich, Examples) {
  auto s = sandwich_bounds(PositiveDefiniteMatrix::identity(2), pd_diag({0.5, 2.0}));
  EXPECT_NEAR(s.m, 0.5, 1e-15);
  EXPECT_NEAR(s.M, 2.0, 1e-15);
  Rng rng(6);
  const auto a = random_pd(rng, 3);
  s = sandwich_bounds(a, a);
  EXPECT_NEAR(s.m, 1.0, 1e-12);
  EXPECT_NEAR(s.M, 1.0, 1e-12);
  s = sandwich_bounds(pd_diag({1, 4}), pd_diag({2, 4}));
  EXPECT_NEAR(s.m, 1.0, 1e-15);
  EXPECT_NEAR(s.M, 2.0, 1e-15);
}

TEST(Sandwich, BoundsHoldInLoewnerOrder) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform_int(1, 6);
    const auto a = random_pd(rng, n), b = random_pd(rng, n);
    const auto s = sandwich_bounds(a, b);
    EXPECT_GE(loewner_leq(s.m * a.hermitian(), b).margin, -1e-10);
    EXPECT_GE(loewner_leq(b, s.M * a.hermitian()).margin, -1e-10);
  }
}

TEST(Spectral, DiagonalCompositionIsEntrywise) {
  const auto a = pd_diag({0.5, 2.0, 7.0});
  const auto sq = PositiveDefiniteMatrix(apply_function(a, ScalarFunction::power(0.5)));
  const auto lg = apply_function(sq, ScalarFunction::log());
  for (int i = 0; i < 3; ++i)
    EXPECT_DOUBLE_EQ(lg(i, i).real(), std::log(std::sqrt(a.matrix()(i, i).real())));
}
