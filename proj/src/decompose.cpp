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

#include "planaut/decompose.hpp"

#include <array>
#include <optional>

#include "planaut/errors.hpp"

namespace planaut {

namespace {

constexpr std::array<Var, 2> kXY{kX, kY};

void require_plane_field(const MultiPoly& p) {
  for (int i = 0; i < p.ring().size(); ++i) {
    const Var v{i};
    if (v != kX && v != kY && p.uses(v))
      throw DomainError("decompose needs a map in X, Y over Q; found " +
                        p.ring().name(v));
  }
}

// c with lead(f) == c * lead(g)^k, if it exists.
std::optional<Rational> power_ratio(const MultiPoly& lead_f,
                                    const MultiPoly& lead_gk) {
  const Term& tf = lead_f.terms()[0];
  const Term& tg = lead_gk.terms()[0];
  if (tf.exponents != tg.exponents) return std::nullopt;
  Rational c = tf.coeff / tg.coeff;
  if (!(lead_f == lead_gk * c)) return std::nullopt;
  return c;
}

}  // namespace

PlaneMap Factorization::recompose() const {
  std::vector<PlaneMap> maps;
  maps.reserve(factors.size());
  for (const Factor& f : factors) maps.push_back(f.map);
  return compose_all(maps);
}

Factorization decompose(const PlaneMap& map) {
  require_plane_field(map.f());
  require_plane_field(map.g());
  const VarTable& ring = map.ring();
  if (total_degree(map.f(), kXY) < 1 || total_degree(map.g(), kXY) < 1)
    throw NotAutomorphism("a component is constant");
  // Raw factors, outermost-first: triangular pieces (X + P(Y), Y), swaps and
  // the final affine remainder.
  std::vector<Factor> raw;
  MultiPoly f = map.f();
  MultiPoly g = map.g();
  const MultiPoly x = MultiPoly::variable(ring, kX);
  for (;;) {
    const int m = total_degree(f, kXY);
    const int n = total_degree(g, kXY);
    if (m < 0 || n < 0) throw NotAutomorphism("a component vanished");
    if (std::max(m, n) <= 1) {
      if (m < 1 || n < 1 || jacobian(PlaneMap(f, g)).is_zero())
        throw NotAutomorphism("affine remainder is not invertible");
      raw.push_back({Factor::Kind::kAffine, PlaneMap(f, g), 1});
      break;
    }
    if (m < n) {
      raw.push_back({Factor::Kind::kAffine, PlaneMap::swap(ring), 1});
      std::swap(f, g);
      continue;
    }
    if (n == 0) throw NotAutomorphism("a component reduced to a constant");
    // Reduce f by polynomials in g until deg f < deg g, or both are linear.
    std::vector<MultiPoly> g_powers{MultiPoly(ring, Rational(1)), g};
    MultiPoly tail(ring);
    int tail_degree = 0;
    for (int d = total_degree(f, kXY); d >= n && d > 1;
         d = total_degree(f, kXY)) {
      if (d % n != 0)
        throw NotAutomorphism("degree " + std::to_string(n) +
                              " does not divide degree " + std::to_string(d));
      const int k = d / n;
      while (static_cast<int>(g_powers.size()) <= k)
        g_powers.push_back(g_powers.back() * g);
      const auto c = power_ratio(leading_form(f, kXY),
                                 leading_form(g_powers[k], kXY));
      if (!c)
        throw NotAutomorphism("leading form of degree " + std::to_string(d) +
                              " is not a scalar power of the other leading "
                              "form");
      f -= g_powers[k] * *c;
      tail += MultiPoly::variable(ring, kY, k) * *c;
      tail_degree = std::max(tail_degree, k);
    }
    const PlaneMap triangle(x + tail, MultiPoly::variable(ring, kY));
    raw.push_back({tail_degree >= 2 ? Factor::Kind::kTriangular
                                    : Factor::Kind::kAffine,
                   triangle, std::max(tail_degree, 1)});
  }

  Factorization out;
  std::vector<int> degrees;
  for (Factor& piece : raw) {
    if (piece.kind == Factor::Kind::kTriangular) {
      degrees.push_back(piece.degree);
      out.factors.push_back(std::move(piece));
    } else if (!out.factors.empty() &&
               out.factors.back().kind == Factor::Kind::kAffine) {
      out.factors.back().map = compose(out.factors.back().map, piece.map);
    } else {
      out.factors.push_back(std::move(piece));
    }
  }
  out.polydegree = Polydegree(std::move(degrees));
  return out;
}

}  // namespace planaut
