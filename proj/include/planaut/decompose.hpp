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

#include <vector>

#include "planaut/plane_map.hpp"

namespace planaut {

struct Factor {
  enum class Kind { kAffine, kTriangular };

  Kind kind;
  PlaneMap map;
  /// Total degree of the factor; 1 for affine factors.
  int degree;
};

/// Alternating affine/triangular factors listed outermost-first, with the
/// triangular degrees collected into the polydegree.
struct Factorization {
  std::vector<Factor> factors;
  Polydegree polydegree;

  /// Product of the factors, outermost-first.
  PlaneMap recompose() const;
};

/// Jung-van der Kulk factorization by leading-form reduction.
///
/// The map must have rational coefficients and involve only X and Y.
/// Subtractions performed against the same component are merged into one
/// triangular factor (X + P(Y), Y); factors of degree <= 1 are absorbed into
/// the neighbouring affine factor.
///
/// Throws NotAutomorphism if the reduction stalls or ends in a singular
/// affine map, which covers every map whose Jacobian is not a nonzero
/// constant. DomainError if the map involves Z or u-variables.
Factorization decompose(const PlaneMap& map);

}  // namespace planaut
