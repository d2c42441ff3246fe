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

#include <string>
#include <vector>

#include "planaut/multipoly.hpp"

namespace planaut {

/// Ordered pair (f, g) acting on the plane as (X, Y) |-> (f, g).
///
/// Composition lists act outermost-first: compose(t3, compose(p, t1)) is
/// the product t3 p t1, i.e. t1 is applied first. Reversing this convention
/// reverses every polydegree.
class PlaneMap {
 public:
  PlaneMap(MultiPoly f, MultiPoly g);

  static PlaneMap identity(const VarTable& ring);
  /// The swap (Y, X).
  static PlaneMap swap(const VarTable& ring);

  const MultiPoly& f() const { return f_; }
  const MultiPoly& g() const { return g_; }
  const VarTable& ring() const { return f_.ring(); }

  friend bool operator==(const PlaneMap&, const PlaneMap&) = default;

 private:
  MultiPoly f_;
  MultiPoly g_;
};

/// Sequence of integers >= 2; empty for affine maps.
class Polydegree {
 public:
  Polydegree() = default;
  explicit Polydegree(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// "(3,2)", or "()" for the empty sequence.
  std::string to_string() const;

  friend bool operator==(const Polydegree&, const Polydegree&) = default;

 private:
  std::vector<int> entries_;
};

/// max of the total (X, Y)-degrees of the components.
int degree(const PlaneMap& map);

/// (f_out[X := f_in, Y := g_in], g_out[X := f_in, Y := g_in]).
PlaneMap compose(const PlaneMap& outer, const PlaneMap& inner);

/// Composes a list given outermost-first. The list must be nonempty.
PlaneMap compose_all(const std::vector<PlaneMap>& maps);

/// df/dX * dg/dY - df/dY * dg/dX.
MultiPoly jacobian(const PlaneMap& map);

/// Image of a map over Q[Z] modulo Z, with Z no longer Laurent.
/// Throws NegativeZPower if a negative power of Z survives.
PlaneMap limit_mod_z(const PlaneMap& map);

/// Specialization Z := z0.
PlaneMap specialize_z(const PlaneMap& map, const Rational& z0);

/// Sum of entries plus 6.
long dimension(const Polydegree& d);

/// Order test for a length-1 sequence (d) against e of length 2 or 3:
/// d <= e1+e2-1, respectively d <= e1+e2+e3-2. Throws DomainError otherwise.
bool preceq(int d, const Polydegree& e);

}  // namespace planaut
