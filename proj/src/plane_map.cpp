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

#include "planaut/plane_map.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "planaut/errors.hpp"

namespace planaut {

namespace {
constexpr std::array<Var, 2> kXY{kX, kY};
}  // namespace

PlaneMap::PlaneMap(MultiPoly f, MultiPoly g) : f_(std::move(f)), g_(std::move(g)) {
  require_same_ring(f_, g_);
}

PlaneMap PlaneMap::identity(const VarTable& ring) {
  return PlaneMap(MultiPoly::variable(ring, kX), MultiPoly::variable(ring, kY));
}

PlaneMap PlaneMap::swap(const VarTable& ring) {
  return PlaneMap(MultiPoly::variable(ring, kY), MultiPoly::variable(ring, kX));
}

Polydegree::Polydegree(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 2) throw DomainError("polydegree entries must be >= 2");
  }
}

std::string Polydegree::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

int degree(const PlaneMap& map) {
  return std::max({0, total_degree(map.f(), kXY), total_degree(map.g(), kXY)});
}

PlaneMap compose(const PlaneMap& outer, const PlaneMap& inner) {
  if (!(outer.ring() == inner.ring()))
    throw RingMismatch("composing maps over different variable tables");
  return PlaneMap(substitute_xy(outer.f(), inner.f(), inner.g()),
                  substitute_xy(outer.g(), inner.f(), inner.g()));
}

PlaneMap compose_all(const std::vector<PlaneMap>& maps) {
  if (maps.empty()) throw DomainError("nothing to compose");
  PlaneMap result = maps.back();
  for (auto it = maps.rbegin() + 1; it != maps.rend(); ++it)
    result = compose(*it, result);
  return result;
}

MultiPoly jacobian(const PlaneMap& map) {
  return derivative(map.f(), kX) * derivative(map.g(), kY) -
         derivative(map.f(), kY) * derivative(map.g(), kX);
}

PlaneMap limit_mod_z(const PlaneMap& map) {
  for (const MultiPoly* p : {&map.f(), &map.g()}) {
    if (min_degree(*p, kZ) < 0)
      throw NegativeZPower("component " + std::string(p == &map.f() ? "f" : "g") +
                           " has Z-exponent " +
                           std::to_string(min_degree(*p, kZ)));
  }
  const VarTable ring = map.ring().with_laurent(kZ, false);
  return PlaneMap(rebase(coefficient(map.f(), kZ, 0), ring),
                  rebase(coefficient(map.g(), kZ, 0), ring));
}

PlaneMap specialize_z(const PlaneMap& map, const Rational& z0) {
  const VarTable ring = map.ring().with_laurent(kZ, false);
  return PlaneMap(rebase(evaluate(map.f(), kZ, z0), ring),
                  rebase(evaluate(map.g(), kZ, z0), ring));
}

long dimension(const Polydegree& d) {
  return std::accumulate(d.entries().begin(), d.entries().end(), 6L);
}

bool preceq(int d, const Polydegree& e) {
  const auto& v = e.entries();
  if (d < 2) throw DomainError("preceq: d must be >= 2");
  if (v.size() == 2) return d <= v[0] + v[1] - 1;
  if (v.size() == 3) return d <= v[0] + v[1] + v[2] - 2;
  throw DomainError("preceq supports sequences of length 2 or 3, got " +
                    std::to_string(v.size()));
}

}  // namespace planaut
