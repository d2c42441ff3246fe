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
#include <string_view>

#include "planaut/multipoly.hpp"

namespace planaut {

/// Parses a polynomial expression.
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ('^' ['-'] integer)?
///   atom     := rational | variable | '(' expr ')'
///   rational := integer ('/' positive-integer)?
///   variable := 'X' | 'Y' | 'Z' | 'u' nonneg-integer
///
/// Implicit multiplication is rejected. Negative exponents are accepted only
/// where the result is a monomial in Laurent variables of `ring`.
/// Throws ParseError with a 1-based line/column.
MultiPoly parse_poly(std::string_view source, const VarTable& ring);

/// Canonical text: terms in canonical order, lowest-terms coefficients,
/// u-variables before X, Y, Z inside each term. parse_poly inverts it.
std::string format_poly(const MultiPoly& p);

}  // namespace planaut
