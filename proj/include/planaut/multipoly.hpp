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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "planaut/rational.hpp"
#include "planaut/var_table.hpp"

namespace planaut {

/// Exponent vector indexed by Var::index. Entries past the table size are 0.
using Exponents = std::array<std::int32_t, kMaxVars>;

struct Term {
  Exponents exponents{};
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// "All identities hold modulo Z^{N+1}".
class TruncOrder {
 public:
  explicit TruncOrder(int n);
  int n() const { return n_; }

 private:
  int n_;
};

/// Sparse polynomial with exact rational coefficients over a VarTable.
///
/// Terms are stored in canonical order (graded-lex descending over the
/// table's variable order) with no zero coefficients; the zero polynomial
/// has no terms. Negative exponents appear only on Laurent variables.
class MultiPoly {
 public:
  explicit MultiPoly(VarTable ring) : ring_(ring) {}
  MultiPoly(VarTable ring, const Rational& constant);

  static MultiPoly variable(const VarTable& ring, Var v, int exponent = 1);
  static MultiPoly monomial(const VarTable& ring, const Exponents& exponents,
                            const Rational& coeff);
  /// Sums duplicate exponent vectors, drops zeros and sorts. Throws
  /// DomainError on a negative exponent of a non-Laurent variable.
  static MultiPoly from_terms(const VarTable& ring, std::vector<Term> terms);

  const VarTable& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True for the zero polynomial and for nonzero constants.
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  /// True if some term has a nonzero exponent of v.
  bool uses(Var v) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) {
    return lhs += rhs;
  }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) {
    return lhs -= rhs;
  }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly p, const Rational& scalar) {
    return p *= scalar;
  }
  friend MultiPoly operator*(const Rational& scalar, MultiPoly p) {
    return p *= scalar;
  }
  friend MultiPoly operator-(MultiPoly p);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  MultiPoly(VarTable ring, std::vector<Term> sorted_terms)
      : ring_(ring), terms_(std::move(sorted_terms)) {}

  friend class TermAccumulator;

  VarTable ring_;
  std::vector<Term> terms_;
};

/// Canonical order: true if a precedes b (graded-lex, descending).
bool term_precedes(const Exponents& a, const Exponents& b, int nvars);

/// Throws RingMismatch unless both tables agree.
void require_same_ring(const MultiPoly& p, const MultiPoly& q);

/// Reinterprets p in another table with the same a. Throws DomainError if a
/// negative exponent would land on a non-Laurent variable.
MultiPoly rebase(const MultiPoly& p, const VarTable& ring);

/// p^e. Negative e is allowed only for a single term whose variables are
/// all Laurent.
MultiPoly pow(const MultiPoly& p, long e);

/// Exact product with every term of Z-degree above N discarded.
MultiPoly mul_truncated(const MultiPoly& p, const MultiPoly& q, TruncOrder n);
MultiPoly pow_truncated(const MultiPoly& p, long e, TruncOrder n);

/// Formal partial derivative, applied `times` times. Throws DomainError if
/// p has a negative exponent in v.
MultiPoly derivative(const MultiPoly& p, Var v, int times = 1);

/// p[v := q]. Throws DomainError if p has a negative exponent in v.
MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& q);
/// Same, computed modulo Z^{N+1}.
MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& q,
                     TruncOrder n);
/// Simultaneous p[X := fx, Y := gy].
MultiPoly substitute_xy(const MultiPoly& p, const MultiPoly& fx,
                        const MultiPoly& gy);

/// Replaces u_j by x[j] for all j. Requires x.size() == a+1 and x[a] != 0.
MultiPoly evaluate_u(const MultiPoly& p, std::span<const Rational> x);
/// Replaces a single variable by a rational value.
MultiPoly evaluate(const MultiPoly& p, Var v, const Rational& value);

/// Drops terms whose Z-exponent exceeds N; negative Z-powers are kept.
MultiPoly truncate_z(const MultiPoly& p, TruncOrder n);

/// Coefficient of v^k, as a polynomial free of v.
MultiPoly coefficient(const MultiPoly& p, Var v, int k);

/// Exact quotient p / q by long division in v. The leading v-coefficient
/// of q must be a unit monomial. Throws DomainError on a nonzero remainder.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q, Var v);

/// Largest exponent of v in p; -1 for the zero polynomial.
int degree(const MultiPoly& p, Var v);
/// Smallest exponent of v in p; 0 for the zero polynomial.
int min_degree(const MultiPoly& p, Var v);
/// Largest total degree in the given variables; -1 for zero.
int total_degree(const MultiPoly& p, std::span<const Var> vars);
/// Part of p of total degree total_degree(p, vars) in vars.
MultiPoly leading_form(const MultiPoly& p, std::span<const Var> vars);

/// U(Y) = u_0 + u_1 Y + ... + u_a Y^a over the given table.
MultiPoly generic_u(const VarTable& ring);

}  // namespace planaut
