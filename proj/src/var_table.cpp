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

#include "planaut/var_table.hpp"

#include "planaut/errors.hpp"

namespace planaut {

VarTable::VarTable(int a) : a_(a), laurent_mask_(1U << 3) {
  if (a < 1 || a > kMaxA)
    throw DomainError("a must lie in [1, " + std::to_string(kMaxA) +
                      "], got " + std::to_string(a));
}

VarTable VarTable::with_laurent_z(int a) {
  return VarTable(a).with_laurent(kZ, true);
}

Var VarTable::u(int j) const {
  if (j < 0 || j > a_)
    throw DomainError("no variable u" + std::to_string(j) + " when a = " +
                      std::to_string(a_));
  return Var{3 + (a_ - j)};
}

int VarTable::u_index(Var v) const { return is_u(v) ? a_ - (v.index - 3) : -1; }

VarTable VarTable::with_laurent(Var v, bool flag) const {
  const std::uint32_t bit = 1U << v.index;
  return VarTable(a_, flag ? (laurent_mask_ | bit) : (laurent_mask_ & ~bit));
}

std::string VarTable::name(Var v) const {
  switch (v.index) {
    case 0:
      return "X";
    case 1:
      return "Y";
    case 2:
      return "Z";
    default:
      return "u" + std::to_string(u_index(v));
  }
}

}  // namespace planaut
