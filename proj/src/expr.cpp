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

#include "planaut/expr.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "planaut/errors.hpp"

namespace planaut {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const VarTable& ring) : src_(src), ring_(ring) {}

  MultiPoly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    MultiPoly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    fail_at(what, pos_);
  }

  [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < pos && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    // Summands are collected and combined once; repeated merging is
    // quadratic in the number of terms.
    std::vector<Term> terms;
    auto append = [&terms](const MultiPoly& p, bool negative) {
      for (const Term& t : p.terms())
        terms.push_back(Term{t.exponents, negative ? Rational(-t.coeff) : t.coeff});
    };
    append(term(), negate);
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      append(term(), c == '-');
    }
    return MultiPoly::from_terms(ring_, std::move(terms));
  }

  MultiPoly term() {
    MultiPoly result = factor();
    while (accept('*')) result = result * factor();
    return result;
  }

  MultiPoly factor() {
    skip_space();
    const std::size_t start = pos_;
    MultiPoly base = atom();
    if (!accept('^')) return base;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const Integer digits = integer("exponent");
    if (digits > std::numeric_limits<int>::max())
      fail_at("exponent out of range", start);
    const long e = digits.get_si();
    try {
      return pow(base, negative ? -e : e);
    } catch (const DomainError& err) {
      fail_at(err.what(), start);
    }
  }

  Integer integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  MultiPoly atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer("integer"));
      const std::size_t save = pos_;
      if (accept('/')) {
        const std::size_t den_pos = pos_;
        const Integer den = integer("denominator");
        if (sgn(den) == 0) fail_at("zero denominator", den_pos);
        value /= Rational(den);
      } else {
        pos_ = save;
      }
      return MultiPoly(ring_, value);
    }
    if (c == 'X' || c == 'Y' || c == 'Z') {
      ++pos_;
      return MultiPoly::variable(ring_, c == 'X' ? kX : c == 'Y' ? kY : kZ);
    }
    if (c == 'u') {
      const std::size_t start = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail_at("unknown variable", start);
      const Integer j = integer("variable index");
      if (j > ring_.a())
        fail_at("unknown variable u" + j.get_str() + " (a = " +
                    std::to_string(ring_.a()) + ")",
                start);
      return MultiPoly::variable(ring_, ring_.u(static_cast<int>(j.get_si())));
    }
    if (at_end()) fail("unexpected end of input");
    if (std::isalpha(static_cast<unsigned char>(c)))
      fail(std::string("unknown variable '") + c + "'");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  VarTable ring_;
  std::size_t pos_ = 0;
};

void append_power(std::ostringstream& out, bool& first, const std::string& name,
                  int e) {
  if (e == 0) return;
  if (!first) out << '*';
  first = false;
  out << name;
  if (e != 1) out << '^' << e;
}

}  // namespace

MultiPoly parse_poly(std::string_view source, const VarTable& ring) {
  return Parser(source, ring).parse();
}

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  const VarTable& ring = p.ring();
  std::ostringstream out;
  bool first_term = true;
  for (const Term& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first_term) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first_term = false;
    const Rational magnitude = abs(t.coeff);
    std::ostringstream vars;
    bool first_var = true;
    for (int j = ring.a(); j >= 0; --j) {
      const Var v = ring.u(j);
      append_power(vars, first_var, ring.name(v), t.exponents[v.index]);
    }
    for (Var v : {kX, kY, kZ})
      append_power(vars, first_var, ring.name(v), t.exponents[v.index]);
    if (first_var) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << vars.str();
    }
  }
  return out.str();
}

}  // namespace planaut
