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
#include "planaut/decompose.hpp"
#include "planaut/errors.hpp"
#include "planaut/expr.hpp"
#include "planaut/family.hpp"
#include "planaut/map_file.hpp"

namespace planaut {
namespace {

const FamilyParams kWorked{2, 2, 1};

TargetTriangular worked_target() {
  return TargetTriangular{1, {0, 0, 0, -8, -5, -2}, 1, 0};
}

class WorkedInstance : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    result_ = new FamilyResult(build_family(kWorked, worked_target()));
  }
  static void TearDownTestSuite() { delete result_; }
  static const FamilyResult& result() { return *result_; }
  static MultiPoly P(const char* src) {
    return parse_poly(src, VarTable::with_laurent_z(2));
  }
  static PlaneMap M(const char* f, const char* g) { return PlaneMap(P(f), P(g)); }

 private:
  static FamilyResult* result_;
};

FamilyResult* WorkedInstance::result_ = nullptr;

TEST_F(WorkedInstance, Intermediates) {
  const FamilyResult& r = result();
  EXPECT_EQ(r.x, (std::vector<Rational>{1, 1, 1}));
  EXPECT_EQ(r.ubar, P("1+Y+Y^2"));
  EXPECT_EQ(r.v, P("1+Y+Y^2"));
  EXPECT_EQ(r.e, P("-1-4*Y-7*Y^2"));
  ASSERT_EQ(r.vbar.size(), 2u);
  EXPECT_EQ(r.vbar[1], P("-(1+4*Y+7*Y^2+8*Y^3+5*Y^4+2*Y^5)"));
  EXPECT_EQ(r.tau1, M("Z*X+1+Y+Y^2", "Y"));
  EXPECT_EQ(r.tau2, M("X+Z*Y^2", "Y"));
  EXPECT_EQ(r.tau3, M("Z^-1*(X-1-Y-Y^2)+1+4*Y+7*Y^2+Z*Y^2", "Y"));
  EXPECT_EQ(r.sigma_z,
            compose_all({r.tau3, PlaneMap::swap(r.tau1.ring()), r.tau2,
                         PlaneMap::swap(r.tau1.ring()), r.tau1}));
}

TEST_F(WorkedInstance, LimitAndJacobian) {
  const FamilyResult& r = result();
  const PlaneMap lim = limit_mod_z(r.sigma_z);
  const VarTable plain(2);
  EXPECT_EQ(rebase(lim.f(), plain), parse_poly("X-8*Y^3-5*Y^4-2*Y^5", plain));
  EXPECT_EQ(rebase(lim.g(), plain), parse_poly("Y", plain));
  EXPECT_EQ(jacobian(r.sigma_z), P("1"));
  EXPECT_EQ(degree(r.sigma_z), 8);
  EXPECT_TRUE(check_cancellation(r));
}

TEST_F(WorkedInstance, AllChecksPass) {
  const FamilyReport report = verify_family(result(), worked_target(), 7);
  EXPECT_TRUE(report.passed()) << report.to_text();
  ASSERT_EQ(report.checks.size(), 7u);
  for (const CheckResult& c : report.checks)
    EXPECT_EQ(c.status, CheckStatus::kPass) << c.id << ": " << c.detail;
  EXPECT_NE(report.to_key_values().find("overall=pass"), std::string::npos);
}

TEST_F(WorkedInstance, TamperedTailFailsLimit) {
  FamilyResult bad = result();
  bad.e += P("Y");
  rebuild_maps(bad);
  const FamilyReport report = verify_family(bad, worked_target(), 7);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.check("iii").status, CheckStatus::kFail);
  EXPECT_EQ(report.check("i").status, CheckStatus::kPass);
  EXPECT_NE(report.to_text().find("limit"), std::string::npos);
}

TEST_F(WorkedInstance, RecordRoundTrip) {
  const std::string text = format_family_record(result(), 9);
  const FamilyRecord back = parse_family_record(text);
  EXPECT_EQ(back.seed, 9u);
  EXPECT_EQ(back.result.sigma_z, result().sigma_z);
  EXPECT_EQ(back.result.x, result().x);
  EXPECT_EQ(format_family_record(back.result, back.seed), text);
}

TEST(Family, ScalingSolution) {
  for (const Rational& k : {Rational(2), Rational(-1, 3), Rational(5, 2)}) {
    for (const Rational& r : {Rational(1), Rational(-3, 2)}) {
      const Rational top = solvable_top_target(kWorked, r, k);
      EXPECT_EQ(top, -2 * k * k * k * r);
      TargetTriangular target{r, {1, 0, 2, 0, 0, top}, 3, 1};
      const FamilyResult res = build_family(kWorked, target);
      EXPECT_EQ(res.x[2], k);
      EXPECT_TRUE(verify_family(res, target, 3).passed());
    }
  }
  EXPECT_EQ(family_top_coefficient(kWorked), 2);
}

TEST(Family, IrrationalRootIsReported) {
  // x_2^3 = 2.
  TargetTriangular target{1, {0, 0, 0, 0, 0, -4}, 1, 0};
  EXPECT_THROW(build_family(kWorked, target), NoRationalRoot);
}

TEST(Family, ParameterValidation) {
  EXPECT_THROW(FamilyParams({1, 2, 1}).validate(), DomainError);
  EXPECT_THROW(FamilyParams({2, 2, 0}).validate(), DomainError);
  TargetTriangular short_y{1, {0, 0, -2}, 1, 0};
  EXPECT_THROW(build_family(kWorked, short_y), DomainError);
  TargetTriangular zero_r{0, {0, 0, 0, 0, 0, -2}, 1, 0};
  EXPECT_THROW(build_family(kWorked, zero_r), DomainError);
}

TEST(Family, FromXSynthesizesTarget) {
  const FamilyParams params{3, 2, 2};
  const std::vector<Rational> x{Rational(1, 2), -1, 2, Rational(-1, 3)};
  const std::vector<Rational> low{3, 0, -1};
  const TargetTriangular target =
      synthesize_target(params, x, Rational(2), Rational(-1), Rational(4), low);
  EXPECT_EQ(static_cast<int>(target.y.size()), params.source_degree() + 1);
  const FamilyResult res = build_family_from_x(params, x, target);
  EXPECT_TRUE(check_cancellation(res));
  const FamilyReport report = verify_family(res, target, 11);
  EXPECT_TRUE(report.passed()) << report.to_text();
  EXPECT_EQ(jacobian(res.sigma_z), MultiPoly(res.sigma_z.ring(), -2));

  TargetTriangular wrong = target;
  wrong.y.back() += 1;
  EXPECT_THROW(build_family_from_x(params, x, wrong), DomainError);
}

TEST(Family, VbarDegrees) {
  const FamilyParams params{2, 3, 2};
  const std::vector<Rational> x{1, -2, 3};
  const TargetTriangular target =
      synthesize_target(params, x, Rational(1), Rational(1), Rational(0), {});
  const FamilyResult res = build_family_from_x(params, x, target);
  for (int k = 0; k <= params.c; ++k)
    EXPECT_EQ(degree(res.vbar[k], kY), k * params.d() + params.a);
  EXPECT_LE(degree(res.e, kY), params.c * params.d() - 1);
  EXPECT_LE(degree(res.v, kY), params.c * params.d() - 1);
}

TEST(Counterexample, Examples) {
  struct Case {
    int a, c;
    std::vector<int> source, target;
    long ds, dt;
  };
  for (const Case& k : std::vector<Case>{{2, 1, {5}, {2, 2, 2}, 11, 12},
                                         {2, 2, {8}, {5, 2, 2}, 14, 15},
                                         {3, 1, {8}, {4, 2, 3}, 14, 15}}) {
    const CounterexampleReport r = counterexample_report(k.a, k.c);
    EXPECT_EQ(r.source, Polydegree(k.source));
    EXPECT_EQ(r.target, Polydegree(k.target));
    EXPECT_EQ(r.source_dimension, k.ds);
    EXPECT_EQ(r.target_dimension, k.dt);
    EXPECT_FALSE(r.preceq);
  }
}

}  // namespace
}  // namespace planaut
