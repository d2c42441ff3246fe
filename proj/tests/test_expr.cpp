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

namespace planaut {
namespace {

ParseError parse_failure(const char* src, const VarTable& ring) {
  try {
    parse_poly(src, ring);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for " << src;
  return ParseError("", 0, 0);
}

TEST(Parse, Examples) {
  const VarTable ring(2);
  EXPECT_EQ(parse_poly("u0 + u1*Y + u2*Y^2", ring), generic_u(ring));
  EXPECT_EQ(parse_poly("1/2*Y^2 - 3", ring),
            MultiPoly::variable(ring, kY, 2) * Rational(1, 2) -
                MultiPoly(ring, 3));
  EXPECT_EQ(parse_poly("-(Y - 1)^3", ring), parse_poly("-Y^3+3*Y^2-3*Y+1", ring));
  EXPECT_EQ(parse_poly("u2^-2*u2", ring), parse_poly("u2^-1", ring));
}

TEST(Parse, LaurentZ) {
  const VarTable lz = VarTable::with_laurent_z(2);
  const MultiPoly p = parse_poly("Z^-1*X", lz);
  EXPECT_EQ(p, MultiPoly::variable(lz, kZ, -1) * MultiPoly::variable(lz, kX));
  EXPECT_THROW(parse_poly("Z^-1*X", VarTable(2)), ParseError);
}

TEST(Parse, ErrorsCarryPositions) {
  const VarTable ring(2);
  ParseError e = parse_failure("2Y", ring);
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 2);
  e = parse_failure("Y +\n  u3", ring);
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 3);
  e = parse_failure("(Y + 1", ring);
  EXPECT_EQ(e.column(), 7);
  parse_failure("W", ring);
  parse_failure("1/0", ring);
  parse_failure("Y^", ring);
  parse_failure("", ring);
  parse_failure("Y + ", ring);
}

TEST(Format, Examples) {
  const VarTable ring(2);
  EXPECT_EQ(format_poly(generic_u(ring)), "u2*Y^2 + u1*Y + u0");
  EXPECT_EQ(format_poly(MultiPoly(ring)), "0");
  EXPECT_EQ(format_poly(-parse_poly("1+4*Y+7*Y^2", ring)), "-7*Y^2 - 4*Y - 1");
  EXPECT_EQ(format_poly(parse_poly("-1/2*u2^-1*X*Z", VarTable::with_laurent_z(2))),
            "-1/2*u2^-1*X*Z");
}

TEST(Format, RoundTripsGeneratedPolynomials) {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const VarTable ring = trial % 2 ? VarTable::with_laurent_z(1 + trial % 4)
                                    : VarTable(1 + trial % 4);
    std::vector<Var> vars{kX, kY, kZ};
    for (int j = 0; j <= ring.a(); ++j) vars.push_back(ring.u(j));
    const MultiPoly p = testing::random_poly(rng, ring, vars, 1 + trial % 6, 3, true);
    const std::string text = format_poly(p);
    ASSERT_EQ(parse_poly(text, ring), p) << text;
    EXPECT_EQ(format_poly(parse_poly(text, ring)), text);
  }
}

}  // namespace
}  // namespace planaut
