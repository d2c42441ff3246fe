// Copyright 2026 The planaut Authors.
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


#include <gtest/gtest.h>

#include "generators.hpp"
#include "planaut/errors.hpp"
#include "planaut/expr.hpp"
#include "planaut/triangular.hpp"

namespace planaut {
namespace {

using testing::Rng;

const VarTable kRing(2);

MultiPoly P(const char* src) { return parse_poly(src, kRing); }

bool is_triangular(const MultiPoly& p, int m) {
  return std::holds_alternative<TriangularWitness>(check_m_triangular(p, m));
}

TriangularFailure failure(const MultiPoly& p, int m) {
  const TriangularCheck c = check_m_triangular(p, m);
  EXPECT_TRUE(std::holds_alternative<TriangularFailure>(c));
  return std::get<TriangularFailure>(c);
}

TEST(CheckTriangular, UIsOneTriangular) {
  const auto w = std::get<TriangularWitness>(check_m_triangular(generic_u(kRing), 1));
  EXPECT_EQ(w.degree, 2);
  EXPECT_EQ(w.q, (std::vector<Rational>{1, 1, 1}));
}

TEST(CheckTriangular, USquared) {
  const MultiPoly u = generic_u(kRing);
  const auto w = std::get<TriangularWitness>(check_m_triangular(u * u, 2));
  EXPECT_EQ(w.degree, 4);
  EXPECT_EQ(w.q, (std::vector<Rational>{2, 2, 1}));
  EXPECT_EQ(w.residuals[0], P("u1^2"));
  EXPECT_TRUE(w.residuals[1].is_zero());
  EXPECT_TRUE(w.residuals[2].is_zero());
  EXPECT_FALSE(is_triangular(u * u, 1));
}

TEST(CheckTriangular, Failures) {
  TriangularFailure f = failure(P("-u2*Y^2"), 1);
  EXPECT_EQ(f.reason, TriangularFailureReason::kLeadingNotPositiveMonomial);
  EXPECT_EQ(f.l, 2);
  f = failure(P("u2*Y^3+u0*Y^2"), 1);
  EXPECT_EQ(f.reason, TriangularFailureReason::kForbiddenLowVariable);
  EXPECT_EQ(f.l, 2);
  f = failure(P("u2*Y+u1"), 1);
  EXPECT_EQ(f.reason, TriangularFailureReason::kDegreeTooSmall);
  f = failure(P("u2*Y^2-u1*Y+u0"), 1);
  EXPECT_EQ(f.reason, TriangularFailureReason::kCoefficientNotPositiveRational);
  EXPECT_EQ(f.l, 1);
  f = failure(P("u2*Y^2+u0"), 1);
  EXPECT_EQ(f.reason, TriangularFailureReason::kCoefficientNotPositiveRational);
  EXPECT_EQ(f.l, 1);
}

TEST(CheckLinear, Examples) {
  const MultiPoly u = generic_u(kRing);
  LinearVerdict v = check_linear(u);
  EXPECT_TRUE(v.linear);
  EXPECT_EQ(v.q, (std::vector<Rational>{1, 1, 1}));
  v = check_linear(derivative(u, kY));
  EXPECT_TRUE(v.linear);
  EXPECT_EQ(v.q, (std::vector<Rational>{1, 2}));
  EXPECT_TRUE(check_linear(P("5/2")).linear);
  EXPECT_FALSE(check_linear(P("u0+u1*Y")).linear);
  EXPECT_TRUE(check_linear(P("u1+u2*Y")).linear);
  EXPECT_FALSE(check_linear(P("-3")).linear);
  EXPECT_FALSE(check_linear(P("u2*Y^3")).linear);
}

TEST(SolveTop, Examples) {
  const MultiPoly u = generic_u(kRing);
  const std::vector<Rational> ones{1, 1, 1};
  const std::vector<Rational> y{5, 3, 2};
  EXPECT_EQ(solve_top(u, 1, ones, y), (std::vector<Rational>{5, 3, 2}));

  const MultiPoly p = u * u * derivative(u, kY);
  const std::vector<Rational> minus{-1, -1, -1};
  const std::vector<Rational> target{-8, -5, -2};
  EXPECT_EQ(solve_top(p, 3, minus, target), ones);

  const std::vector<Rational> two{0, 0, 2};
  EXPECT_THROW(solve_top(u * u, 2, ones, two), NoRationalRoot);
  EXPECT_THROW(solve_top(P("u2*Y^3+u0*Y^2"), 1, ones, y), WitnessMissing);
}

TEST(SolveTop, RecoversForcedTargets) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const VarTable ring(1 + trial % 3);
    const int a = ring.a();
    const int m = 1 + trial % 4;
    const MultiPoly p = testing::random_triangular(rng, ring, m, a + trial % 3);
    const int d = degree(p, kY);
    std::vector<Rational> x(a + 1), t(a + 1), y(a + 1);
    for (int j = 0; j < a; ++j) x[j] = testing::random_rational(rng);
    x[a] = testing::random_nonzero(rng);
    for (int i = 0; i <= a; ++i) {
      t[i] = testing::random_nonzero(rng);
      y[i] = t[i] * evaluate_u(coefficient(p, kY, d - a + i), x).constant_term();
    }
    const std::vector<Rational> sol = solve_top(p, m, t, y);
    ASSERT_EQ(sol.size(), static_cast<std::size_t>(a + 1));
    EXPECT_NE(sgn(sol[a]), 0);
    for (int i = 0; i <= a; ++i)
      EXPECT_EQ(t[i] * evaluate_u(coefficient(p, kY, d - a + i), sol).constant_term(),
                y[i]);
  }
}

class Closure : public ::testing::TestWithParam<int> {};

TEST_P(Closure, Properties) {
  const VarTable ring(GetParam());
  const int a = ring.a();
  const MultiPoly u = generic_u(ring);
  Rng rng(1000 + a);
  std::uniform_int_distribution<int> mdist(1, 3), extra(0, 2), edist(0, a);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = mdist(rng), n = mdist(rng), d = a + extra(rng);
    const MultiPoly p = testing::random_triangular(rng, ring, m, d);
    ASSERT_TRUE(is_triangular(p, m));
    const MultiPoly p2 = testing::random_triangular(rng, ring, m, d);
    const MultiPoly q = testing::random_triangular(rng, ring, n, a + extra(rng));
    const MultiPoly lin = testing::random_linear(rng, ring, edist(rng));
    ASSERT_TRUE(check_linear(lin).linear);
    const Rational c = testing::random_positive(rng);

    EXPECT_TRUE(is_triangular(p + p2, m));
    EXPECT_TRUE(is_triangular(p * q, m + n));
    EXPECT_TRUE(is_triangular(c * p, m));
    EXPECT_TRUE(check_linear(c * lin).linear);
    if (d >= a + 1) EXPECT_TRUE(is_triangular(derivative(p, kY), m));
    if (degree(lin, kY) >= 1) EXPECT_TRUE(check_linear(derivative(lin, kY)).linear);
    EXPECT_TRUE(is_triangular(p * lin, m + 1));
  }
}

TEST_P(Closure, DerivativeProducts) {
  const VarTable ring(GetParam());
  const int a = ring.a();
  const MultiPoly u = generic_u(ring);
  Rng rng(2000 + a);
  std::vector<MultiPoly> derivs{u};
  for (int j = 1; j <= a; ++j) derivs.push_back(derivative(u, kY, j));
  for (int n = 1; n <= 3; ++n) {
    for (const MultiIndex& k : index_set(n, a)) {
      const int m = 1 + n % 2;
      const MultiPoly p = testing::random_triangular(rng, ring, m, a + 1);
      MultiPoly prod = p;
      for (int j = 0; j <= a; ++j) prod *= pow(derivs[j], k[j]);
      const TriangularCheck c = check_m_triangular(prod, m + n);
      ASSERT_TRUE(std::holds_alternative<TriangularWitness>(c));
      EXPECT_EQ(std::get<TriangularWitness>(c).degree, a + 1 + (a - 1) * n);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(A, Closure, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace planaut
