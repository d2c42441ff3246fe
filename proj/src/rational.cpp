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

#include "planaut/rational.hpp"

#include "planaut/errors.hpp"

namespace planaut {

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

namespace {

std::optional<Integer> exact_root(const Integer& value, unsigned long m) {
  if (sgn(value) < 0) {
    if (m % 2 == 0) return std::nullopt;
    auto positive = exact_root(Integer(-value), m);
    if (!positive) return std::nullopt;
    return Integer(-*positive);
  }
  Integer root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), m) == 0)
    return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& value, unsigned long m) {
  if (m == 0) throw DomainError("zeroth root");
  auto num = exact_root(value.get_num(), m);
  auto den = exact_root(value.get_den(), m);
  if (!num || !den) return std::nullopt;
  Rational root(*num, *den);
  root.canonicalize();
  return root;
}

Rational pow(const Rational& value, long e) {
  if (e < 0) {
    if (sgn(value) == 0) throw DomainError("negative power of zero");
    return pow(Rational(1 / value), -e);
  }
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), value.get_num_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(result.get_den_mpz_t(), value.get_den_mpz_t(),
             static_cast<unsigned long>(e));
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational");
  Rational result;
  const std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  const auto slash = s.find('/');
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits_ok(start, num_end) ||
      (slash != std::string::npos && !digits_ok(slash + 1, s.size())))
    throw DomainError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  if (result.set_str(s, 10) != 0)
    throw DomainError("malformed rational '" + s + "'");
  if (sgn(result.get_den()) == 0)
    throw DomainError("zero denominator in '" + s + "'");
  result.canonicalize();
  return result;
}

}  // namespace planaut
