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

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "planaut/multipoly.hpp"

namespace planaut {

/// Staircase data of an (m, U)-triangular polynomial P of degree d: for
/// d-a <= l <= d, p_l = q_l u_a^{m-1} u_{a-d+l} + P_l(u_{a-d+l+1}, ..., u_a)
/// with q_l > 0, and p_d = q_d u_a^m.
struct TriangularWitness {
  int degree;
  int m;
  /// q[i] belongs to l = degree - a + i.
  std::vector<Rational> q;
  /// residuals[i] is P_l for l = degree - a + i; the last one is zero.
  std::vector<MultiPoly> residuals;
};

enum class TriangularFailureReason {
  kDegreeTooSmall,
  kLeadingNotPositiveMonomial,
  kCoefficientNotPositiveRational,
  kForbiddenLowVariable,
};

std::string to_string(TriangularFailureReason reason);

/// First violated clause, scanning l from d downwards.
struct TriangularFailure {
  TriangularFailureReason reason;
  int l;
};

using TriangularCheck = std::variant<TriangularWitness, TriangularFailure>;

/// Decides whether P in R[Y] is (m, U)-triangular, with a = P.ring().a().
/// Throws DomainError if P involves X or Z, or m < 1.
TriangularCheck check_m_triangular(const MultiPoly& p, int m);

struct LinearVerdict {
  bool linear = false;
  /// q_0..q_d on success.
  std::vector<Rational> q;
};

/// U-linearity: deg P = d <= a and p_l in Q_+ u_{a-d+l} for 0 <= l <= d.
/// Positive rational constants are also accepted.
LinearVerdict check_linear(const MultiPoly& p);

/// Finds x in Q^a x Q* with t_l p_l(x) = y_l for d-a <= l <= d, where P is
/// m-triangular of degree d. t and y are indexed by l - (d - a).
///
/// Throws WitnessMissing if P is not m-triangular and NoRationalRoot if
/// y_d / (t_d q_d) has no rational m-th root.
std::vector<Rational> solve_top(const MultiPoly& p, int m,
                                std::span<const Rational> t,
                                std::span<const Rational> y);

}  // namespace planaut
