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

#include "opent/bounds.hpp"
#include "opent/random.hpp"
#include "oracles/scalar_oracle.hpp"

using namespace opent;

namespace {
const double e = std::numbers::e;

oracle::Scalar as_scalar(const ScalarFunction& f) {
  return [f](double t) { return f(t); };
}
}  // namespace

TEST(Secant, Coefficients) {
  auto c = secant_coeffs(ScalarFunction::identity(), 1, 2);
  EXPECT_NEAR(c.mu, 1.0, 1e-15);
  EXPECT_NEAR(c.nu, 0.0, 1e-15);
  c = secant_coeffs(ScalarFunction::log(), 1, e);
  EXPECT_NEAR(c.mu, 1 / (e - 1), 1e-15);
  EXPECT_NEAR(c.nu, -1 / (e - 1), 1e-15);
  c = secant_coeffs(ScalarFunction::power(0.5), 1, 4);
  EXPECT_NEAR(c.mu, 1.0 / 3, 1e-15);
  EXPECT_NEAR(c.nu, 2.0 / 3, 1e-15);
  EXPECT_THROW((void)secant_coeffs(ScalarFunction::log(), 2, 2), PreconditionError);
  EXPECT_THROW((void)secant_coeffs(ScalarFunction::log(), 2, 1), PreconditionError);
}

TEST(Secant, ChordInterpolatesEndpoints) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const double m = rng.uniform(0.01, 3), M = m + rng.uniform(0.01, 10);
    for (const char* s : {"log", "neg_t_log_t", "power:0.3"}) {
      const auto f = ScalarFunction::parse(s);
      const auto c = secant_coeffs(f, m, M);
      EXPECT_NEAR(c.mu * m + c.nu, f(m), 1e-12 * std::max(1.0, std::abs(f(m))));
      EXPECT_NEAR(c.mu * M + c.nu, f(M), 1e-12 * std::max(1.0, std::abs(f(M))));
    }
  }
}

TEST(Gamma, Examples) {
  EXPECT_NEAR(gamma_f(ScalarFunction::identity(), 0.3, 7.0), 1.0, 1e-12);
  const auto g = gamma_f_with_argmax(ScalarFunction::power(0.5), 1, 4);
  EXPECT_NEAR(g.value, 3 * std::numbers::sqrt2 / 4, 1e-10);
  EXPECT_NEAR(g.argmax, 2.0, 1e-5);
}

TEST(Gamma, LogZeroAtLeftEnd) {
  // On [1, e^2] the chord is mu (t - 1) and log t / (t - 1) decreases, so the
  // maximum is the t -> 1 limit 1 / mu = (e^2 - 1) / 2.
  const auto g = gamma_f_with_argmax(ScalarFunction::log(), 1, e * e);
  EXPECT_NEAR(g.value, (e * e - 1) / 2, 1e-10);
  EXPECT_DOUBLE_EQ(g.argmax, 1.0);
  const double mu = 2 / (e * e - 1);
  const auto scan = oracle::brute_max(
      [&](double t) { return t == 1.0 ? 0.0 : std::log(t) / (mu * (t - 1)); }, 1, e * e);
  EXPECT_NEAR(g.value, scan.value, 1e-4);
  EXPECT_GE(g.value, scan.value);
}

TEST(Gamma, Errors) {
  // Chord of log on [0.5, 2] is negative near 0.5.
  EXPECT_THROW((void)gamma_f(ScalarFunction::log(), 0.5, 2), DomainError);
  // -t log t is negative on (1, 2] but its chord on [0.5, 2] is too.
  EXPECT_THROW((void)gamma_f(ScalarFunction::neg_t_log_t(), 0.5, 2), Error);
  EXPECT_THROW((void)gamma_f(ScalarFunction::log(), 2, 1), PreconditionError);
}

TEST(Zeta, Examples) {
  EXPECT_NEAR(zeta_f(ScalarFunction::identity(), 0.5, 9), 0.0, 1e-12);
  const auto z = zeta_f_with_argmax(ScalarFunction::power(0.5), 1, 4);
  EXPECT_NEAR(z.value, 1.0 / 12, 1e-12);
  EXPECT_NEAR(z.argmax, 9.0 / 4, 1e-6);
}

TEST(Zeta, MatchesDenseScan) {
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    const double m = rng.uniform(0.05, 1), M = rng.uniform(1.5, 10);
    for (const char* s : {"log", "neg_t_log_t", "power:0.5", "power:0.25"}) {
      const auto f = ScalarFunction::parse(s);
      EXPECT_NEAR(zeta_f(f, m, M), oracle::brute_zeta(as_scalar(f), m, M).value, 1e-8) << s;
    }
    for (const char* s : {"power:0.5", "power:0.25", "affine:1,2"}) {
      const auto f = ScalarFunction::parse(s);
      EXPECT_NEAR(gamma_f(f, m, M), oracle::brute_gamma(as_scalar(f), m, M).value, 1e-8) << s;
    }
  }
}

TEST(SecantData, ConcaveInvariantsAndScalarSandwich) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const double m = rng.uniform(0.05, 2), M = m + rng.uniform(0.05, 8);
    for (const char* s : {"power:0.5", "power:0.25", "log", "neg_t_log_t", "identity"}) {
      const auto f = ScalarFunction::parse(s);
      const auto d = secant_data(f, m, M);
      EXPECT_GE(d.zeta, -1e-12);
      EXPECT_GE(d.argmax_zeta, m);
      EXPECT_LE(d.argmax_zeta, M);
      for (double t : scan_grid(m, M)) {
        const double chord = d.mu * t + d.nu;
        EXPECT_GE(f(t), chord - 1e-10);
        EXPECT_LE(f(t), chord + d.zeta + 1e-10);
        if (d.gamma) EXPECT_LE(f(t), *d.gamma * chord + 1e-10);
      }
      if (d.gamma) EXPECT_GE(*d.gamma, 1 - 1e-12);
      if (check_nonnegative_on(f, m, M) && f(m) > 0) {
        EXPECT_TRUE(d.gamma.has_value()) << s << " " << d.gamma_error;
      }
    }
  }
}

TEST(Means, LogarithmicMean) {
  EXPECT_DOUBLE_EQ(logarithmic_mean(1, 1), 1.0);
  EXPECT_NEAR(logarithmic_mean(1, e), e - 1, 1e-14);
  EXPECT_NEAR(logarithmic_mean(2, 2 * (1 + 1e-13)), 2.0, 1e-12);
  EXPECT_THROW((void)logarithmic_mean(0, 1), PreconditionError);
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(1e-3, 100), b = rng.uniform(1e-3, 100);
    const double l = logarithmic_mean(a, b), in = identric_mean(a, b);
    EXPECT_GE(l, std::sqrt(a * b) * (1 - 1e-12));
    EXPECT_LE(l, 0.5 * (a + b) * (1 + 1e-12));
    EXPECT_LE(l, in * (1 + 1e-12));
    EXPECT_GE(in, std::min(a, b) * (1 - 1e-12));
    EXPECT_LE(in, std::max(a, b) * (1 + 1e-12));
    EXPECT_NEAR(l, oracle::logarithmic_mean(a, b), 1e-10 * l);
  }
}

TEST(Means, IdentricMean) {
  EXPECT_DOUBLE_EQ(identric_mean(1, 1), 1.0);
  EXPECT_NEAR(identric_mean(1, e), std::exp(-1) * std::pow(std::exp(e), 1 / (e - 1)), 1e-14);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.uniform(0.05, 10), b = rng.uniform(0.05, 10);
    EXPECT_NEAR(identric_mean(a, b), oracle::identric_mean(a, b), 1e-9 * identric_mean(a, b));
  }
}

TEST(ClosedForms, MatchOptimizer) {
  const auto z = zeta_closed_forms(0.5, 2.0);
  EXPECT_NEAR(z.zeta_log, zeta_f(ScalarFunction::log(), 0.5, 2.0), 1e-8);
  EXPECT_NEAR(z.zeta_neg_t_log_t, zeta_f(ScalarFunction::neg_t_log_t(), 0.5, 2.0), 1e-8);
  EXPECT_GE(z.zeta_log, -1e-12);
  EXPECT_GE(z.zeta_neg_t_log_t, -1e-12);
  const auto tiny = zeta_closed_forms(1 - 1e-6, 1 + 1e-6);
  EXPECT_NEAR(tiny.zeta_log, 0.0, 1e-10);
  EXPECT_NEAR(tiny.zeta_neg_t_log_t, 0.0, 1e-10);
  EXPECT_THROW((void)zeta_closed_forms(1.0, 2.0), PreconditionError);
  EXPECT_THROW((void)zeta_closed_forms(0.5, 0.9), PreconditionError);
}
