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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace planaut {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// n! as an exact integer. Requires n >= 0.
Integer factorial(long n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// The rational r with r^m == value, if one exists.
///
/// Odd m accepts negative radicands; even m with a negative radicand has no
/// rational root.
std::optional<Rational> exact_root(const Rational& value, unsigned long m);

/// value^e for any integer e; e < 0 requires value != 0.
Rational pow(const Rational& value, long e);

std::string to_string(const Rational& value);

/// Parses "n" or "n/d" (optional leading sign). Throws DomainError.
Rational parse_rational(std::string_view text);

}  // namespace planaut
