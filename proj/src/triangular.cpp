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

#include "planaut/triangular.hpp"

#include "planaut/errors.hpp"

namespace planaut {

namespace {

void require_r_of_y(const MultiPoly& p) {
  if (p.uses(kX) || p.uses(kZ))
    throw DomainError("expected a polynomial in R[Y]");
}

// u_a^{m-1} u_j as an exponent vector.
Exponents staircase_monomial(const VarTable& ring, int m, int j) {
  Exponents e{};
  e[ring.u(ring.a()).index] += m - 1;
  e[ring.u(j).index] += 1;
  return e;
}

Rational coefficient_of(const MultiPoly& p, const Exponents& e) {
  for (const Term& t : p.terms()) {
    if (t.exponents == e) return t.coeff;
  }
  return 0;
}

// True if p lies in Q[u_{j+1}, ..., u_a] (no negative powers of u_a).
bool only_higher_variables(const MultiPoly& p, int j) {
  const VarTable& ring = p.ring();
  for (const Term& t : p.terms()) {
    for (int i = 0; i <= ring.a(); ++i) {
      const int e = t.exponents[ring.u(i).index];
      if (e < 0 || (i <= j && e != 0)) return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(TriangularFailureReason reason) {
  switch (reason) {
    case TriangularFailureReason::kDegreeTooSmall:
      return "DegreeTooSmall";
    case TriangularFailureReason::kLeadingNotPositiveMonomial:
      return "LeadingNotPositiveMonomial";
    case TriangularFailureReason::kCoefficientNotPositiveRational:
      return "CoefficientNotPositiveRational";
    case TriangularFailureReason::kForbiddenLowVariable:
      return "ForbiddenLowVariable";
  }
  return "Unknown";
}

TriangularCheck check_m_triangular(const MultiPoly& p, int m) {
  require_r_of_y(p);
  if (m < 1) throw DomainError("m must be >= 1");
  const VarTable& ring = p.ring();
  const int a = ring.a();
  const int d = degree(p, kY);
  if (d < a) return TriangularFailure{TriangularFailureReason::kDegreeTooSmall, d};

  TriangularWitness witness{d, m, std::vector<Rational>(a + 1),
                            std::vector<MultiPoly>(a + 1, MultiPoly(ring))};
  const MultiPoly top = coefficient(p, kY, d);
  const Exponents top_monomial = staircase_monomial(ring, m, a);
  if (top.size() != 1 || top.terms()[0].exponents != top_monomial ||
      sgn(top.terms()[0].coeff) <= 0)
    return TriangularFailure{
        TriangularFailureReason::kLeadingNotPositiveMonomial, d};
  witness.q[a] = top.terms()[0].coeff;

  for (int l = d - 1; l >= d - a; --l) {
    const int j = a - d + l;
    const MultiPoly pl = coefficient(p, kY, l);
    const Exponents e = staircase_monomial(ring, m, j);
    const Rational q = coefficient_of(pl, e);
    MultiPoly residual = pl - MultiPoly::monomial(ring, e, q);
    if (!only_higher_variables(residual, j))
      return TriangularFailure{TriangularFailureReason::kForbiddenLowVariable,
                               l};
    if (sgn(q) <= 0)
      return TriangularFailure{
          TriangularFailureReason::kCoefficientNotPositiveRational, l};
    witness.q[j] = q;
    witness.residuals[j] = std::move(residual);
  }
  return witness;
}

LinearVerdict check_linear(const MultiPoly& p) {
  require_r_of_y(p);
  const VarTable& ring = p.ring();
  const int a = ring.a();
  const int d = degree(p, kY);
  if (d < 0 || d > a) return {};
  if (d == 0 && p.is_constant() && sgn(p.constant_term()) > 0)
    return {true, {p.constant_term()}};
  LinearVerdict verdict{true, {}};
  for (int l = 0; l <= d; ++l) {
    const MultiPoly pl = coefficient(p, kY, l);
    Exponents e{};
    e[ring.u(a - d + l).index] = 1;
    if (pl.size() != 1 || pl.terms()[0].exponents != e ||
        sgn(pl.terms()[0].coeff) <= 0)
      return {};
    verdict.q.push_back(pl.terms()[0].coeff);
  }
  return verdict;
}

std::vector<Rational> solve_top(const MultiPoly& p, int m,
                                std::span<const Rational> t,
                                std::span<const Rational> y) {
  const TriangularCheck check = check_m_triangular(p, m);
  if (const auto* failure = std::get_if<TriangularFailure>(&check)) {
    throw WitnessMissing("polynomial is not " + std::to_string(m) +
                         "-triangular: " + to_string(failure->reason) +
                         " at l = " + std::to_string(failure->l));
  }
  const auto& w = std::get<TriangularWitness>(check);
  const int a = p.ring().a();
  if (static_cast<int>(t.size()) != a + 1 || static_cast<int>(y.size()) != a + 1)
    throw DomainError("solve_top expects a+1 scalings and targets");
  for (const Rational& tl : t) {
    if (sgn(tl) == 0) throw DomainError("scalings t_l must be nonzero");
  }
  if (sgn(y[a]) == 0) throw DomainError("top target y_d must be nonzero");

  std::vector<Rational> x(a + 1);
  const Rational radicand = y[a] / (t[a] * w.q[a]);
  const auto root = exact_root(radicand, static_cast<unsigned long>(m));
  if (!root)
    throw NoRationalRoot("x_a^" + std::to_string(m) + " = " +
                         to_string(radicand) + " has no rational solution");
  x[a] = *root;
  const Rational scale = pow(x[a], m - 1);
  // p_l is affine in u_j with every other variable already known.
  for (int j = a - 1; j >= 0; --j) {
    const Rational known = evaluate_u(w.residuals[j], x).constant_term();
    x[j] = (y[j] / t[j] - known) / (w.q[j] * scale);
  }
  return x;
}

}  // namespace planaut
