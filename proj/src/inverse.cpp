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

#include "planaut/inverse.hpp"

#include <algorithm>
#include <random>

#include "planaut/errors.hpp"

namespace planaut {

namespace {

void require_r_of_y(const MultiPoly& u) {
  if (u.uses(kX) || u.uses(kZ))
    throw DomainError("U must be a polynomial in Y over R");
}

MultiPoly z_power(const VarTable& ring, int k) {
  return MultiPoly::variable(ring, kZ, k);
}

// Rank of a dense rational matrix by exact Gaussian elimination.
std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

MultiPoly InverseSeries::as_poly() const {
  MultiPoly out(coeffs.front().ring());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out += coeffs[k] * z_power(out.ring(), static_cast<int>(k));
  return out;
}

InverseSeries formal_inverse(const MultiPoly& u, int b, TruncOrder n) {
  require_r_of_y(u);
  if (b < 1) throw DomainError("b must be >= 1");
  const VarTable& ring = u.ring();
  const MultiPoly y = MultiPoly::variable(ring, kY);
  const MultiPoly z = z_power(ring, 1);
  MultiPoly inverse = y;
  // Each pass fixes one more Z-coefficient.
  for (int pass = 0; pass <= n.n(); ++pass) {
    const MultiPoly u_of_i = substitute(u, kY, inverse, n);
    MultiPoly next =
        y - mul_truncated(z, pow_truncated(u_of_i, b, n), n);
    if (next == inverse) break;
    inverse = std::move(next);
  }
  InverseSeries out{b, n, {}};
  for (int k = 0; k <= n.n(); ++k)
    out.coeffs.push_back(coefficient(inverse, kZ, k));
  return out;
}

std::vector<MultiPoly> v_sequence(const MultiPoly& u, int b, TruncOrder n) {
  require_r_of_y(u);
  if (b < 1) throw DomainError("b must be >= 1");
  const VarTable& ring = u.ring();
  const MultiPoly u_b = pow(u, b);
  std::vector<MultiPoly> u_bj{MultiPoly(ring, Rational(1))};
  std::vector<MultiPoly> v{u};
  for (int m = 1; m <= n.n(); ++m) {
    u_bj.push_back(u_bj.back() * u_b);
    MultiPoly sum(ring);
    for (int j = 1; j <= m; ++j) {
      sum += u_bj[j] * derivative(v[m - j], kY, j) *
             Rational(Integer(1), factorial(j));
    }
    v.push_back(-sum);
  }
  return v;
}

std::vector<MultiPoly> u_of_inverse(const InverseSeries& inverse,
                                    const MultiPoly& u) {
  const MultiPoly composed = substitute(u, kY, inverse.as_poly(), inverse.order);
  std::vector<MultiPoly> out;
  for (int k = 0; k <= inverse.order.n(); ++k)
    out.push_back(coefficient(composed, kZ, k));
  return out;
}

MultiPoly w_recursive(int n, int lambda, const MultiPoly& u) {
  if (n < 0 || lambda < 0) throw DomainError("w needs n, lambda >= 0");
  const MultiPoly du = derivative(u, kY);
  MultiPoly w(u.ring(), Rational(1, lambda + 1));
  for (int level = 1; level <= n; ++level) {
    w = du * w * Rational(lambda - level + 2) + u * derivative(w, kY);
  }
  return w;
}

bool DerivBasisCoeffs::all_positive() const {
  for (const auto& [k, q] : table) {
    if (sgn(q) <= 0) return false;
  }
  return true;
}

DerivBasisCoeffs w_basis(int n, int lambda, int a) {
  if (n < 0 || lambda < 0 || a < 1)
    throw DomainError("w_basis needs n, lambda >= 0 and a >= 1");
  std::map<MultiIndex, Rational> level{
      {MultiIndex(a + 1, 0), Rational(1, lambda + 1)}};
  for (int step = 1; step <= n; ++step) {
    std::map<MultiIndex, Rational> next;
    for (const auto& [k, q] : level) {
      MultiIndex shifted = k;
      ++shifted[1];
      next[shifted] += q * (lambda - step + 2);
      for (int j = 0; j < a; ++j) {
        if (k[j] == 0) continue;
        MultiIndex moved = k;
        ++moved[0];
        --moved[j];
        ++moved[j + 1];
        next[moved] += q * k[j];
      }
    }
    level = std::move(next);
  }
  return DerivBasisCoeffs{n, lambda, a, std::move(level)};
}

MultiPoly expand_basis(const DerivBasisCoeffs& coeffs, const MultiPoly& u) {
  const int a = coeffs.a;
  std::vector<MultiPoly> derivs{u};
  for (int j = 1; j <= a; ++j) derivs.push_back(derivative(derivs.back(), kY));
  MultiPoly out(u.ring());
  for (const auto& [k, q] : coeffs.table) {
    MultiPoly product(u.ring(), q);
    for (int j = 0; j <= a; ++j) product *= pow(derivs[j], k[j]);
    out += product;
  }
  return out;
}

std::vector<MultiIndex> index_set(int n, int a) {
  std::vector<MultiIndex> out;
  MultiIndex k(a + 1, 0);
  // Fill k_a, k_{a-1}, ..., k_1 within the weight budget; k_0 takes the rest.
  auto fill = [&](auto&& self, int j, int count, int weight) -> void {
    if (j == 0) {
      if (weight == n && count <= n) {
        k[0] = n - count;
        out.push_back(k);
      }
      return;
    }
    for (int kj = 0; weight + j * kj <= n && count + kj <= n; ++kj) {
      k[j] = kj;
      self(self, j - 1, count + kj, weight + j * kj);
    }
    k[j] = 0;
  };
  fill(fill, a, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool basis_products_independent(int n, int a, std::uint64_t seed) {
  const VarTable ring(a);
  const MultiPoly u = generic_u(ring);
  const std::vector<MultiIndex> keys = index_set(n, a);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<std::vector<Rational>> rows;
  for (int point = 0; point < 3; ++point) {
    std::vector<Rational> x;
    for (int j = 0; j <= a; ++j) {
      int p = num(rng);
      if (j == a && p == 0) p = 1;
      x.emplace_back(p, den(rng));
      x.back().canonicalize();
    }
    const MultiPoly ux = evaluate_u(u, x);
    std::vector<MultiPoly> columns;
    int max_deg = 0;
    for (const MultiIndex& k : keys) {
      DerivBasisCoeffs single{n, 0, a, {{k, Rational(1)}}};
      columns.push_back(expand_basis(single, ux));
      max_deg = std::max(max_deg, degree(columns.back(), kY));
    }
    for (int e = 0; e <= max_deg; ++e) {
      std::vector<Rational> row;
      for (const MultiPoly& c : columns)
        row.push_back(coefficient(c, kY, e).constant_term());
      rows.push_back(std::move(row));
    }
  }
  return rank(std::move(rows)) == keys.size();
}

MultiPoly lemma_s(int n, int k, int m, int r, const MultiPoly& u, int b) {
  if (k < 1 || k > m || n < 0 || r < 0 || b < 1)
    throw DomainError("lemma_s needs 1 <= k <= m, n >= 0, r >= 0, b >= 1");
  MultiPoly sum(u.ring());
  for (int j = 0; j <= m; ++j) {
    const Rational sign = (j % 2 == 0) ? 1 : -1;
    sum += derivative(w_recursive(k, (m + r - j) * b, u), kY, n) *
           Rational(sign * binomial(m, j));
  }
  return sum;
}

MultiPoly v_closed(int m, int n, const MultiPoly& u, int b) {
  if (m < 0 || n < 0 || b < 1) throw DomainError("v_closed needs m, n >= 0");
  const int e = b * m - m - n + 1;
  const Rational prefactor(Integer(m % 2 == 0 ? 1 : -1), factorial(m));
  const MultiPoly w = w_recursive(m + n, b * m, u);
  if (e >= 0) return pow(u, e) * w * prefactor;
  return divide_exact(w, pow(u, -e), kY) * prefactor;
}

}  // namespace planaut
