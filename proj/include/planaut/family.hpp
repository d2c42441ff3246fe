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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planaut/plane_map.hpp"

namespace planaut {

/// a, b >= 2, c >= 1 and d = ab - 1.
struct FamilyParams {
  int a;
  int b;
  int c;

  int d() const { return a * b - 1; }
  /// cd + a, the degree of the target.
  int source_degree() const { return c * d() + a; }
  /// Throws DomainError when a, b < 2 or c < 1.
  void validate() const;
};

/// tau = (r X + sum_j y_j Y^j, s Y + t) with r, s and y.back() nonzero.
struct TargetTriangular {
  Rational r;
  std::vector<Rational> y;
  Rational s;
  Rational t;

  PlaneMap as_map(const VarTable& ring) const;
  /// Reads r, y, s, t off a triangular map; throws DomainError if the map
  /// does not have that shape.
  static TargetTriangular from_map(const PlaneMap& map);
};

/// Every intermediate of the degeneration sigma_Z = tau3 pi tau2 pi tau1.
struct FamilyResult {
  FamilyParams params;
  TargetTriangular target;
  /// Specialization point (x_0..x_a), x_a != 0.
  std::vector<Rational> x;
  /// vbar[k] = v_k(x) for 0 <= k <= c.
  std::vector<MultiPoly> vbar;
  MultiPoly ubar;
  MultiPoly v;
  MultiPoly e;
  PlaneMap tau1;
  PlaneMap tau2;
  PlaneMap tau3;
  PlaneMap sigma_z;
};

/// Coefficient q_top of u_a^{bc+1} Y^{cd+a} in (-1)^c c! v_c.
Rational family_top_coefficient(const FamilyParams& params);

/// A top target y_{cd+a} for which x_a = k solves the root equation.
Rational solvable_top_target(const FamilyParams& params, const Rational& r,
                             const Rational& k);

/// Solves for x and assembles sigma_Z. Throws NoRationalRoot when
/// x_a^{bc+1} = y_{cd+a} (-1)^c c! / (r q_top) has no rational solution.
FamilyResult build_family(const FamilyParams& params,
                          const TargetTriangular& target);

/// Builds the target from x: the top window of y is r v_c(x), the low part
/// (degrees < cd) comes from `low` (missing entries are 0).
TargetTriangular synthesize_target(const FamilyParams& params,
                                   std::span<const Rational> x,
                                   const Rational& r, const Rational& s,
                                   const Rational& t,
                                   std::span<const Rational> low);

/// Assembles the family for a given x without solving for it. The target's
/// top window must equal r v_c(x).
FamilyResult build_family_from_x(const FamilyParams& params,
                                 std::span<const Rational> x,
                                 const TargetTriangular& target);

/// Recomputes tau1, tau2, tau3 and sigma_Z from ubar, v, e and the target.
void rebuild_maps(FamilyResult& result);

/// Ubar(Y) - V(W, Z) == vbar_c(Y) Z^c modulo Z^{c+1}, with
/// W = Y + Z (Z^c X + Ubar(Y))^b.
bool check_cancellation(const FamilyResult& result);

enum class CheckStatus { kPass, kFail, kExhausted };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string id;
  std::string key;
  std::string description;
  CheckStatus status;
  std::string detail;
};

struct FamilyReport {
  FamilyParams params;
  std::vector<CheckResult> checks;
  /// z0 values tried by the specialization check.
  std::vector<Rational> samples;

  bool passed() const;
  const CheckResult& check(const std::string& id) const;
  std::string to_text() const;
  std::string to_key_values() const;
};

/// Runs the seven checks on a built family, in a fixed order:
///  (i)   no negative powers of Z in sigma_Z
///  (ii)  jacobian(sigma_Z) = r s
///  (iii) sigma_Z mod Z = tau
///  (iv)  deg tau1 = a, deg tau2 = b, deg tau3 = cd-1
///  (v)   deg sigma_Z = ab(cd-1)
///  (vi)  sigma_{z0} has polydegree (cd-1, b, a) for a random z0 != 0,
///        resampled up to 5 times
///  (vii) tau has polydegree (cd+a)
FamilyReport verify_family(const FamilyResult& result,
                           const TargetTriangular& target,
                           std::uint64_t seed = 1);

struct CounterexampleReport {
  int a;
  int c;
  int b = 2;
  int d;
  Polydegree source;
  Polydegree target;
  long source_dimension;
  long target_dimension;
  bool preceq;

  std::string to_text() const;
  std::string to_key_values() const;
};

/// b = 2, d = 2a - 1: compares (cd+a) against (cd-1, 2, a).
CounterexampleReport counterexample_report(int a, int c);

}  // namespace planaut
