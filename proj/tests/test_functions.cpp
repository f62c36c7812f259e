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

#include "opent/functions.hpp"
#include "opent/random.hpp"

using namespace opent;

TEST(Functions, Evaluate) {
  EXPECT_DOUBLE_EQ(ScalarFunction::log()(1.0), 0.0);
  EXPECT_DOUBLE_EQ(ScalarFunction::power(0.5)(4.0), 2.0);
  EXPECT_NEAR(ScalarFunction::neg_t_log_t()(std::numbers::e), -std::numbers::e, 1e-15);
  EXPECT_DOUBLE_EQ(ScalarFunction::affine(1.0, 2.0)(3.0), 7.0);
  EXPECT_DOUBLE_EQ(ScalarFunction::constant(2.5)(100.0), 2.5);
}

TEST(Functions, DomainErrors) {
  EXPECT_THROW((void)ScalarFunction::log()(0.0), DomainError);
  EXPECT_THROW((void)ScalarFunction::log()(-1.0), DomainError);
  EXPECT_THROW((void)ScalarFunction::power(0.5)(std::nan("")), DomainError);
}

TEST(Functions, ParseRoundTrip) {
  for (const char* s : {"log", "identity", "neg_t_log_t", "power:0.5", "power:0.25", "const:3",
                        "affine:1,2"}) {
    const auto f = ScalarFunction::parse(s);
    EXPECT_EQ(f.spec(), s);
    EXPECT_EQ(ScalarFunction::parse(f.spec()).spec(), f.spec());
  }
  EXPECT_EQ(ScalarFunction::parse("power:0.5").kind(), FunctionKind::power);
}

TEST(Functions, ParseRejects) {
  for (const char* s : {"", "sqrt", "power:", "power:x", "power:2", "affine:1", "const:-1",
                        "power:0.5x"})
    EXPECT_THROW((void)ScalarFunction::parse(s), PreconditionError) << s;
}

TEST(Functions, CatalogFlags) {
  EXPECT_TRUE(ScalarFunction::power(0.5).flags().operator_monotone);
  EXPECT_TRUE(ScalarFunction::power(0.5).flags().strictly_concave);
  EXPECT_FALSE(ScalarFunction::power(1.0).flags().strictly_concave);
  EXPECT_TRUE(ScalarFunction::log().flags().operator_concave);
  EXPECT_FALSE(ScalarFunction::neg_t_log_t().flags().operator_monotone);
  EXPECT_TRUE(ScalarFunction::neg_t_log_t().flags().operator_concave);
}

TEST(Functions, NonnegativeOn) {
  EXPECT_TRUE(check_nonnegative_on(ScalarFunction::log(), 1.0, 2.0));
  EXPECT_FALSE(check_nonnegative_on(ScalarFunction::log(), 0.5, 2.0));
  EXPECT_TRUE(check_nonnegative_on(ScalarFunction::neg_t_log_t(), 0.5, 1.0));
  EXPECT_FALSE(check_nonnegative_on(ScalarFunction::neg_t_log_t(), 0.5, 1.5));
  EXPECT_THROW((void)check_nonnegative_on(ScalarFunction::log(), 2.0, 1.0), PreconditionError);
}

TEST(Functions, DerivativesMatchCentralDifferences) {
  Rng rng(1);
  for (const char* s : {"log", "identity", "neg_t_log_t", "power:0.5", "power:0.25", "const:3",
                        "affine:1,2"}) {
    const auto f = ScalarFunction::parse(s);
    ASSERT_TRUE(f.has_derivative());
    for (int i = 0; i < 100; ++i) {
      const double t = rng.uniform(0.05, 10.0), h = 1e-5;
      const double fd = (f(t + h) - f(t - h)) / (2 * h);
      const double d = *f.derivative(t);
      EXPECT_LE(std::abs(fd - d), 1e-6 * std::max(1.0, std::abs(d))) << s << " at " << t;
    }
  }
}

TEST(Functions, PowerOrderingAboveOne) {
  const auto grid = scan_grid(1.0, 50.0);
  for (double p : {0.0, 0.25, 0.5}) {
    for (double q : {0.5, 0.75, 1.0}) {
      if (p > q) continue;
      const auto fp = ScalarFunction::power(p), fq = ScalarFunction::power(q);
      for (double t : grid) EXPECT_LE(fp(t), fq(t) + 1e-12);
    }
  }
}

TEST(Functions, ConcavityFlagConsistency) {
  Rng rng(77);
  for (const char* s : {"log", "identity", "neg_t_log_t", "power:0.5", "power:0.25", "const:3",
                        "affine:1,2"}) {
    const auto f = ScalarFunction::parse(s);
    ASSERT_TRUE(f.flags().operator_concave);
    for (int i = 0; i < 1000; ++i) {
      const double a = rng.uniform(1e-3, 20.0), b = rng.uniform(1e-3, 20.0);
      EXPECT_GE(f(0.5 * (a + b)), 0.5 * (f(a) + f(b)) - 1e-12) << s;
    }
  }
}

TEST(Functions, CustomFlagsAreVerified) {
  FunctionFlags claims{Interval{0.0}, true, true, true};
  const auto convex = ScalarFunction::custom("square", [](double t) { return t * t; }, std::nullopt,
                                             0.0, claims);
  EXPECT_THROW(validate_declared_flags(convex, 0.5, 2.0), PreconditionError);
  const auto negative = ScalarFunction::custom("shifted", [](double t) { return std::sqrt(t) - 1; },
                                               std::nullopt, 0.0, claims);
  EXPECT_THROW(validate_declared_flags(negative, 0.5, 2.0), PreconditionError);
  const auto fine = ScalarFunction::custom("root", [](double t) { return std::sqrt(t); },
                                           std::nullopt, 0.0, claims);
  EXPECT_NO_THROW(validate_declared_flags(fine, 0.5, 2.0));
  EXPECT_FALSE(fine.has_derivative());
}
