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
#include <string>

namespace planaut {

/// Maximum number of variables in a table: X, Y, Z and u_0..u_a with a <= 12.
inline constexpr int kMaxVars = 16;
inline constexpr int kMaxA = kMaxVars - 4;

/// Index of a variable inside a VarTable.
struct Var {
  int index;

  friend bool operator==(Var, Var) = default;
};

inline constexpr Var kX{0};
inline constexpr Var kY{1};
inline constexpr Var kZ{2};

/// Ordered variable list X > Y > Z > u_a > ... > u_0, plus the set of
/// variables allowed to carry negative exponents.
///
/// The ordering is total and fixed; it drives the canonical term order.
class VarTable {
 public:
  /// Ring R[X,Y,Z] with R = Q[u_0..u_{a-1}][u_a, 1/u_a].
  explicit VarTable(int a);

  /// Same ring with Z additionally invertible.
  static VarTable with_laurent_z(int a);

  int a() const { return a_; }
  int size() const { return a_ + 4; }

  /// Variable u_j, 0 <= j <= a.
  Var u(int j) const;
  /// j such that v == u_j, or -1 when v is X, Y or Z.
  int u_index(Var v) const;
  bool is_u(Var v) const { return v.index >= 3 && v.index < size(); }

  bool laurent(Var v) const { return (laurent_mask_ >> v.index) & 1U; }
  VarTable with_laurent(Var v, bool flag) const;

  std::string name(Var v) const;

  friend bool operator==(const VarTable&, const VarTable&) = default;

 private:
  VarTable(int a, std::uint32_t mask) : a_(a), laurent_mask_(mask) {}

  int a_;
  std::uint32_t laurent_mask_;
};

}  // namespace planaut
