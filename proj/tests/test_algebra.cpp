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

#include <vector>

#include "generators.hpp"
#include "planaut/errors.hpp"
#include "planaut/expr.hpp"
#include "planaut/multipoly.hpp"

namespace planaut {
namespace {

using testing::Rng;

MultiPoly P(const char* src, int a = 2) { return parse_poly(src, VarTable(a)); }

// Dense schoolbook convolution on coefficient vectors in Y.
std::vector<Rational> dense_mul(const std::vector<Rational>& p,
                                const std::vector<Rational>& q) {
  std::vector<Rational> out(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

MultiPoly from_dense(const VarTable& ring, const std::vector<Rational>& c) {
  MultiPoly p(ring);
  for (std::size_t k = 0; k < c.size(); ++k)
    p += MultiPoly::variable(ring, kY, static_cast<int>(k)) * c[k];
  return p;
}

TEST(Rational, ExactRoots) {
  EXPECT_EQ(exact_root(Rational(8, 27), 3), Rational(2, 3));
  EXPECT_EQ(exact_root(Rational(-8), 3), Rational(-2));
  EXPECT_FALSE(exact_root(Rational(-4), 2).has_value());
  EXPECT_FALSE(exact_root(Rational(2), 2).has_value());
  EXPECT_EQ(exact_root(Rational(0), 5), Rational(0));
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("6/4").get_den(), 2);
  EXPECT_EQ(parse_rational("0/7").get_den(), 1);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(VarTable, LayoutAndLaurentFlags) {
  const VarTable ring(3);
  EXPECT_EQ(ring.name(ring.u(3)), "u3");
  EXPECT_TRUE(ring.laurent(ring.u(3)));
  EXPECT_FALSE(ring.laurent(ring.u(2)));
  EXPECT_FALSE(ring.laurent(kZ));
  EXPECT_TRUE(VarTable::with_laurent_z(3).laurent(kZ));
  EXPECT_EQ(ring.u_index(ring.u(1)), 1);
  EXPECT_EQ(ring.u_index(kY), -1);
  EXPECT_THROW(VarTable(0), DomainError);
}

TEST(Mul, Examples) {
  EXPECT_EQ(P("(Y+1)*(Y-1)"), P("Y^2-1"));
  EXPECT_EQ(P("u2^-1") * P("u2"), P("1"));
  EXPECT_EQ(P("(1+Y+Y^2)^2*(1+2*Y)"), P("1+4*Y+7*Y^2+8*Y^3+5*Y^4+2*Y^5"));
}

TEST(Mul, RingMismatch) {
  EXPECT_THROW(P("Y", 2) * P("Y", 3), RingMismatch);
  EXPECT_THROW(P("Y", 2) + P("Y", 3), RingMismatch);
}

TEST(Mul, AgreesWithDenseOracle) {
  Rng rng(11);
  const VarTable ring(1);
  std::uniform_int_distribution<int> len(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> p(len(rng)), q(len(rng));
    for (auto& c : p) c = testing::random_rational(rng);
    for (auto& c : q) c = testing::random_rational(rng);
    EXPECT_EQ(from_dense(ring, p) * from_dense(ring, q),
              from_dense(ring, dense_mul(p, q)));
  }
}

TEST(Mul, ExponentOverflowIsRejected) {
  const VarTable ring(1);
  const MultiPoly big = MultiPoly::variable(ring, kY, 2000000000);
  EXPECT_THROW(big * big, DomainError);
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(P("u0+u1*Y+u2*Y^2"), kY), P("u1+2*u2*Y"));
  EXPECT_TRUE(derivative(P("7/3*u1"), kY).is_zero());
  const MultiPoly u = generic_u(VarTable(2));
  const MultiPoly up = derivative(u, kY), upp = derivative(u, kY, 2);
  EXPECT_EQ(derivative(u * u * up, kY), 2 * u * up * up + u * u * upp);
  EXPECT_EQ(derivative(pow(u, 2) * up, kY),
            derivative(P("(u0+u1*Y+u2*Y^2)^2*(u1+2*u2*Y)"), kY));
}

TEST(Derivative, NegativeExponentRejected) {
  const VarTable ring(2);
  EXPECT_THROW(derivative(P("u2^-1*Y"), ring.u(2)), DomainError);
  EXPECT_EQ(derivative(P("u2^-1*Y"), kY), P("u2^-1"));
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(P("Y^2+1"), kY, P("Y+Z")), P("Y^2+2*Y*Z+Z^2+1"));
  EXPECT_EQ(substitute(generic_u(VarTable(2)), kY, P("0")), P("u0"));
  const MultiPoly shift = P("Y+Z*(u0+u1*Y+u2*Y^2)^2");
  EXPECT_EQ(substitute(P("Y"), kY, shift), shift);
}

TEST(Substitute, NegativeExponentRejected) {
  const VarTable ring = VarTable::with_laurent_z(2);
  EXPECT_THROW(substitute(parse_poly("Z^-1*X", ring), kZ,
                          parse_poly("Y", ring)),
               DomainError);
}

TEST(EvaluateU, Examples) {
  const std::vector<Rational> ones{1, 1, 1};
  EXPECT_EQ(evaluate_u(generic_u(VarTable(2)), ones), P("1+Y+Y^2"));
  const std::vector<Rational> half{5, 7, 2};
  EXPECT_EQ(evaluate_u(P("u2^-1"), half), P("1/2"));
  const std::vector<Rational> bad{1, 1, 0};
  EXPECT_THROW(evaluate_u(generic_u(VarTable(2)), bad), DomainError);
  const std::vector<Rational> short_x{1, 1};
  EXPECT_THROW(evaluate_u(generic_u(VarTable(2)), short_x), DomainError);
}

TEST(TruncateZ, Examples) {
  EXPECT_EQ(truncate_z(P("1+Z+Z^2+Z^3"), TruncOrder(1)), P("1+Z"));
  const VarTable lz = VarTable::with_laurent_z(2);
  const MultiPoly p = parse_poly("Z^-1*X", lz);
  EXPECT_EQ(truncate_z(p, TruncOrder(0)), p);
  EXPECT_THROW(TruncOrder(-1), DomainError);
}

TEST(Degrees, Basics) {
  const MultiPoly p = P("u2*Y^3*X + Y^2 + X");
  EXPECT_EQ(degree(p, kY), 3);
  EXPECT_EQ(min_degree(p, kY), 0);
  const std::vector<Var> xy{kX, kY};
  EXPECT_EQ(total_degree(p, xy), 4);
  EXPECT_EQ(leading_form(p, xy), P("u2*Y^3*X"));
  EXPECT_EQ(degree(MultiPoly(VarTable(2)), kY), -1);
  EXPECT_EQ(coefficient(p, kY, 2), P("1"));
}

class RingLaws : public ::testing::TestWithParam<int> {};

TEST_P(RingLaws, Hold) {
  Rng rng(GetParam());
  const VarTable ring(2);
  const std::vector<Var> vars{kX, kY, ring.u(2), ring.u(0)};
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly p = testing::random_poly(rng, ring, vars, 4, 2, true);
    const MultiPoly q = testing::random_poly(rng, ring, vars, 4, 2, true);
    const MultiPoly r = testing::random_poly(rng, ring, vars, 4, 2, true);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p + q, q + p);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p * MultiPoly(ring, 1), p);
  }
}

TEST_P(RingLaws, ProductRule) {
  Rng rng(100 + GetParam());
  const VarTable ring(2);
  const std::vector<Var> vars{kX, kY, ring.u(1)};
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly p = testing::random_poly(rng, ring, vars, 4, 3);
    const MultiPoly q = testing::random_poly(rng, ring, vars, 4, 3);
    for (Var v : vars)
      EXPECT_EQ(derivative(p * q, v), derivative(p, v) * q + p * derivative(q, v));
  }
}

TEST_P(RingLaws, SubstituteIsHomomorphism) {
  Rng rng(200 + GetParam());
  const VarTable ring(2);
  const std::vector<Var> vars{kX, kY, kZ, ring.u(2)};
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly p = testing::random_poly(rng, ring, vars, 3, 2);
    const MultiPoly q = testing::random_poly(rng, ring, vars, 3, 2);
    const MultiPoly s = testing::random_poly(rng, ring, vars, 3, 2);
    EXPECT_EQ(substitute(p + q, kY, s), substitute(p, kY, s) + substitute(q, kY, s));
    EXPECT_EQ(substitute(p * q, kY, s), substitute(p, kY, s) * substitute(q, kY, s));
    const TruncOrder n(2);
    EXPECT_EQ(substitute(p, kY, s, n), truncate_z(substitute(p, kY, s), n));
    EXPECT_EQ(mul_truncated(p, q, n), truncate_z(p * q, n));
  }
}

TEST_P(RingLaws, EvaluateCommutesWithArithmetic) {
  Rng rng(300 + GetParam());
  const VarTable ring(2);
  const std::vector<Var> vars{kY, ring.u(0), ring.u(1), ring.u(2)};
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly p = testing::random_poly(rng, ring, vars, 4, 2, true);
    const MultiPoly q = testing::random_poly(rng, ring, vars, 4, 2, true);
    const std::vector<Rational> x{testing::random_rational(rng),
                                  testing::random_rational(rng),
                                  testing::random_nonzero(rng)};
    EXPECT_EQ(evaluate_u(p * q, x), evaluate_u(p, x) * evaluate_u(q, x));
    EXPECT_EQ(evaluate_u(p + q, x), evaluate_u(p, x) + evaluate_u(q, x));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingLaws, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace planaut
