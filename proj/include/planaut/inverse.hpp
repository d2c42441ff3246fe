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
#include <map>
#include <vector>

#include "planaut/multipoly.hpp"

namespace planaut {

/// Truncated formal inverse I(Y, Z) = sum_k coeffs[k](Y) Z^k of
/// Y + Z U(Y)^b, i.e. I(Y + Z U(Y)^b, Z) = Y modulo Z^{N+1}.
struct InverseSeries {
  int b;
  TruncOrder order;
  std::vector<MultiPoly> coeffs;

  /// sum_k coeffs[k] Z^k.
  MultiPoly as_poly() const;
};

/// Z-adic fixed point of I <- Y - Z U(I)^b, truncated at N. U must lie in
/// R[Y]; b >= 1.
InverseSeries formal_inverse(const MultiPoly& u, int b, TruncOrder n);

/// v_0..v_N from v_0 = U and v_m = -sum_{j=1}^m U^{bj}/j! v_{m-j}^{(j)}.
std::vector<MultiPoly> v_sequence(const MultiPoly& u, int b, TruncOrder n);

/// Z-coefficients of U(I(Y, Z)) up to the series' order.
std::vector<MultiPoly> u_of_inverse(const InverseSeries& inverse,
                                    const MultiPoly& u);

/// w_{0,l} = 1/(l+1); w_{n,l} = (l-n+2) U' w_{n-1,l} + U w_{n-1,l}'.
MultiPoly w_recursive(int n, int lambda, const MultiPoly& u);

/// Multi-index k = (k_0..k_a) standing for prod_j (U^{(j)})^{k_j}.
using MultiIndex = std::vector<int>;

/// Coefficients of w_{n,lambda} on the products prod_j (U^{(j)})^{k_j},
/// (k_0..k_a) in I_n.
struct DerivBasisCoeffs {
  int n;
  int lambda;
  int a;
  std::map<MultiIndex, Rational> table;

  /// Whether every stored value is strictly positive.
  bool all_positive() const;
};

/// Builds the table level by level: an entry k -> q at level n-1 feeds
/// (lambda-n+2) q into k + e_1 and k_j q into k + e_0 - e_j + e_{j+1}.
/// Entries that cancel to zero are kept.
DerivBasisCoeffs w_basis(int n, int lambda, int a);

/// sum_k q_k prod_j (U^{(j)})^{k_j}.
MultiPoly expand_basis(const DerivBasisCoeffs& coeffs, const MultiPoly& u);

/// All k with sum k_j = n and sum j k_j = n, in lexicographic order.
std::vector<MultiIndex> index_set(int n, int a);

/// Evaluates the products prod_j (U^{(j)})^{k_j}, k in I_n, at three random
/// rational points of (u_0..u_a) and reports whether the stacked
/// coefficient vectors are linearly independent.
bool basis_products_independent(int n, int a, std::uint64_t seed);

/// S(n,k,m,r) = sum_{j=0}^m (-1)^j C(m,j) w_{k,(m+r-j)b}^{(n)}.
/// Requires 1 <= k <= m, n >= 0, r >= 0, b >= 1.
MultiPoly lemma_s(int n, int k, int m, int r, const MultiPoly& u, int b);

/// ((-1)^m / m!) U^{bm-m-n+1} w_{m+n,bm}, which equals v_m^{(n)}.
/// For bm-m-n+1 < 0 the power of U divides w exactly in R[Y]; DomainError
/// if it does not.
MultiPoly v_closed(int m, int n, const MultiPoly& u, int b);

}  // namespace planaut
