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

#include "planaut/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "planaut/errors.hpp"

namespace planaut {

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::int32_t x : e) {
      h ^= static_cast<std::uint32_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int32_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw DomainError("exponent overflow");
  return out;
}

Exponents add_exponents(const Exponents& a, const Exponents& b, int n) {
  Exponents out{};
  for (int i = 0; i < n; ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

void check_laurent(const VarTable& ring, const Exponents& e) {
  for (int i = 0; i < ring.size(); ++i) {
    if (e[i] < 0 && !ring.laurent(Var{i}))
      throw DomainError("negative exponent on non-Laurent variable " +
                        ring.name(Var{i}));
  }
}

}  // namespace

/// Hash-based accumulation of terms, finalized into canonical order.
class TermAccumulator {
 public:
  explicit TermAccumulator(const VarTable& ring) : ring_(ring) {}

  void add(const Exponents& e, const Rational& c) {
    auto [it, inserted] = map_.try_emplace(e);
    if (inserted)
      it->second = c;
    else
      it->second += c;
  }

  void add_product(const Exponents& e, const Rational& c1, const Rational& c2) {
    auto [it, inserted] = map_.try_emplace(e);
    if (inserted) {
      mpq_mul(it->second.get_mpq_t(), c1.get_mpq_t(), c2.get_mpq_t());
    } else {
      mpq_mul(scratch_.get_mpq_t(), c1.get_mpq_t(), c2.get_mpq_t());
      it->second += scratch_;
    }
  }

  void reserve(std::size_t n) { map_.reserve(n); }

  MultiPoly finish() {
    std::vector<Term> terms;
    terms.reserve(map_.size());
    for (auto& [e, c] : map_) {
      if (sgn(c) != 0) terms.push_back(Term{e, std::move(c)});
    }
    map_.clear();
    const int n = ring_.size();
    std::sort(terms.begin(), terms.end(), [n](const Term& x, const Term& y) {
      return term_precedes(x.exponents, y.exponents, n);
    });
    return MultiPoly(ring_, std::move(terms));
  }

 private:
  VarTable ring_;
  std::unordered_map<Exponents, Rational, ExponentsHash> map_;
  Rational scratch_;
};

TruncOrder::TruncOrder(int n) : n_(n) {
  if (n < 0) throw DomainError("truncation order must be >= 0");
}

bool term_precedes(const Exponents& a, const Exponents& b, int nvars) {
  long da = 0;
  long db = 0;
  for (int i = 0; i < nvars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db;
  for (int i = 0; i < nvars; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

MultiPoly::MultiPoly(VarTable ring, const Rational& constant) : ring_(ring) {
  if (sgn(constant) != 0) terms_.push_back(Term{Exponents{}, constant});
}

MultiPoly MultiPoly::variable(const VarTable& ring, Var v, int exponent) {
  Exponents e{};
  e[v.index] = exponent;
  return monomial(ring, e, Rational(1));
}

MultiPoly MultiPoly::monomial(const VarTable& ring, const Exponents& exponents,
                              const Rational& coeff) {
  check_laurent(ring, exponents);
  MultiPoly p(ring);
  if (sgn(coeff) != 0) p.terms_.push_back(Term{exponents, coeff});
  return p;
}

MultiPoly MultiPoly::from_terms(const VarTable& ring, std::vector<Term> terms) {
  TermAccumulator acc(ring);
  for (const Term& t : terms) {
    check_laurent(ring, t.exponents);
    for (int i = ring.size(); i < kMaxVars; ++i) {
      if (t.exponents[i] != 0)
        throw DomainError("exponent on a variable outside the table");
    }
    acc.add(t.exponents, t.coeff);
  }
  return acc.finish();
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].exponents == Exponents{});
}

Rational MultiPoly::constant_term() const {
  // The constant monomial has degree 0, so search rather than index.
  for (const Term& t : terms_) {
    if (t.exponents == Exponents{}) return t.coeff;
  }
  return 0;
}

bool MultiPoly::uses(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) {
    return t.exponents[v.index] != 0;
  });
}

void require_same_ring(const MultiPoly& p, const MultiPoly& q) {
  if (!(p.ring() == q.ring()))
    throw RingMismatch("operands live in different variable tables");
}

namespace {

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a,
                              std::span<const Term> b, int n,
                              Combine combine) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() ||
        (i < a.size() && term_precedes(a[i].exponents, b[j].exponents, n))) {
      out.push_back(a[i++]);
    } else if (i == a.size() ||
               term_precedes(b[j].exponents, a[i].exponents, n)) {
      out.push_back(Term{b[j].exponents, combine(Rational(0), b[j].coeff)});
      ++j;
    } else {
      Rational c = combine(a[i].coeff, b[j].coeff);
      if (sgn(c) != 0) out.push_back(Term{a[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms(), ring_.size(),
                       [](const Rational& x, const Rational& y) {
                         return Rational(x + y);
                       });
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms(), ring_.size(),
                       [](const Rational& x, const Rational& y) {
                         return Rational(x - y);
                       });
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= scalar;
  return *this;
}

MultiPoly operator-(MultiPoly p) {
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

MultiPoly multiply(const MultiPoly& p, const MultiPoly& q, int z_bound) {
  require_same_ring(p, q);
  const int n = p.ring().size();
  if (p.is_zero() || q.is_zero()) return MultiPoly(p.ring());
  if (q.is_constant() && z_bound == std::numeric_limits<int>::max())
    return p * q.terms()[0].coeff;
  if (p.is_constant() && z_bound == std::numeric_limits<int>::max())
    return q * p.terms()[0].coeff;
  TermAccumulator acc(p.ring());
  acc.reserve(std::min<std::size_t>(p.size() * q.size(), 1U << 20));
  const int z = kZ.index;
  for (const Term& s : p.terms()) {
    for (const Term& t : q.terms()) {
      if (static_cast<long>(s.exponents[z]) + t.exponents[z] > z_bound)
        continue;
      acc.add_product(add_exponents(s.exponents, t.exponents, n), s.coeff,
                      t.coeff);
    }
  }
  return acc.finish();
}

}  // namespace

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  return multiply(lhs, rhs, std::numeric_limits<int>::max());
}

MultiPoly mul_truncated(const MultiPoly& p, const MultiPoly& q, TruncOrder n) {
  return multiply(p, q, n.n());
}

MultiPoly rebase(const MultiPoly& p, const VarTable& ring) {
  if (p.ring().a() != ring.a())
    throw RingMismatch("cannot rebase between tables with different a");
  if (p.ring() == ring) return p;
  return MultiPoly::from_terms(
      ring, std::vector<Term>(p.terms().begin(), p.terms().end()));
}

MultiPoly pow(const MultiPoly& p, long e) {
  if (e < 0) {
    if (p.size() != 1)
      throw DomainError("negative power of a non-monomial");
    const Term& t = p.terms()[0];
    Exponents inv{};
    for (int i = 0; i < p.ring().size(); ++i) {
      if (t.exponents[i] != 0 && !p.ring().laurent(Var{i}))
        throw DomainError("negative power of non-Laurent variable " +
                          p.ring().name(Var{i}));
      inv[i] = -t.exponents[i];
    }
    return pow(MultiPoly::monomial(p.ring(), inv, Rational(1 / t.coeff)), -e);
  }
  MultiPoly result(p.ring(), Rational(1));
  for (long i = 0; i < e; ++i) result = result * p;
  return result;
}

MultiPoly pow_truncated(const MultiPoly& p, long e, TruncOrder n) {
  if (e < 0) throw DomainError("negative power in truncated arithmetic");
  MultiPoly result = truncate_z(MultiPoly(p.ring(), Rational(1)), n);
  const MultiPoly base = truncate_z(p, n);
  for (long i = 0; i < e; ++i) result = mul_truncated(result, base, n);
  return result;
}

MultiPoly derivative(const MultiPoly& p, Var v, int times) {
  if (times < 0) throw DomainError("negative derivative order");
  if (min_degree(p, v) < 0)
    throw DomainError("derivative in " + p.ring().name(v) +
                      " across a negative exponent");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) {
    const std::int32_t e = t.exponents[v.index];
    if (e < times) continue;
    Rational c = t.coeff;
    for (int k = 0; k < times; ++k) c *= e - k;
    Term out{t.exponents, std::move(c)};
    out.exponents[v.index] -= times;
    terms.push_back(std::move(out));
  }
  return MultiPoly::from_terms(p.ring(), std::move(terms));
}

namespace {

// Terms of p grouped by their exponent of v, with that exponent cleared.
std::map<int, std::vector<Term>> split_by(const MultiPoly& p, Var v) {
  std::map<int, std::vector<Term>> groups;
  for (const Term& t : p.terms()) {
    Term stripped = t;
    stripped.exponents[v.index] = 0;
    groups[t.exponents[v.index]].push_back(std::move(stripped));
  }
  return groups;
}

MultiPoly substitute_impl(const MultiPoly& p, Var v, const MultiPoly& q,
                          const TruncOrder* n) {
  require_same_ring(p, q);
  if (min_degree(p, v) < 0)
    throw DomainError("substitution for " + p.ring().name(v) +
                      " into a negative exponent");
  auto mul = [n](const MultiPoly& x, const MultiPoly& y) {
    return n ? mul_truncated(x, y, *n) : x * y;
  };
  MultiPoly result(p.ring());
  MultiPoly power(p.ring(), Rational(1));
  int power_exp = 0;
  for (auto& [k, terms] : split_by(p, v)) {
    while (power_exp < k) {
      power = mul(power, q);
      ++power_exp;
    }
    result += mul(MultiPoly::from_terms(p.ring(), std::move(terms)), power);
  }
  return n ? truncate_z(result, *n) : result;
}

}  // namespace

MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& q) {
  return substitute_impl(p, v, q, nullptr);
}

MultiPoly substitute(const MultiPoly& p, Var v, const MultiPoly& q,
                     TruncOrder n) {
  return substitute_impl(p, v, q, &n);
}

MultiPoly substitute_xy(const MultiPoly& p, const MultiPoly& fx,
                        const MultiPoly& gy) {
  require_same_ring(p, fx);
  require_same_ring(p, gy);
  if (min_degree(p, kX) < 0 || min_degree(p, kY) < 0)
    throw DomainError("substitution into a negative exponent of X or Y");
  // p = sum_i X^i * c_i(Y); each c_i(gy) is built from shared powers of gy.
  std::vector<MultiPoly> gy_powers{MultiPoly(p.ring(), Rational(1))};
  MultiPoly result(p.ring());
  MultiPoly fx_power(p.ring(), Rational(1));
  int fx_exp = 0;
  for (auto& [i, x_terms] : split_by(p, kX)) {
    MultiPoly inner(p.ring());
    for (auto& [j, terms] :
         split_by(MultiPoly::from_terms(p.ring(), std::move(x_terms)), kY)) {
      while (static_cast<int>(gy_powers.size()) <= j)
        gy_powers.push_back(gy_powers.back() * gy);
      inner += MultiPoly::from_terms(p.ring(), std::move(terms)) * gy_powers[j];
    }
    while (fx_exp < i) {
      fx_power = fx_power * fx;
      ++fx_exp;
    }
    result += fx_power * inner;
  }
  return result;
}

namespace {

// value^e with a per-variable cache.
class PowerCache {
 public:
  explicit PowerCache(Rational base) : base_(std::move(base)) {}
  const Rational& get(int e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(e, pow(base_, e)).first->second;
  }

 private:
  Rational base_;
  std::map<int, Rational> cache_;
};

}  // namespace

MultiPoly evaluate_u(const MultiPoly& p, std::span<const Rational> x) {
  const VarTable& ring = p.ring();
  const int a = ring.a();
  if (static_cast<int>(x.size()) != a + 1)
    throw DomainError("evaluate_u expects " + std::to_string(a + 1) +
                      " values, got " + std::to_string(x.size()));
  if (sgn(x[a]) == 0) throw DomainError("x_a must be nonzero");
  std::vector<PowerCache> caches;
  caches.reserve(a + 1);
  for (int j = 0; j <= a; ++j) caches.emplace_back(x[j]);
  TermAccumulator acc(ring);
  for (const Term& t : p.terms()) {
    Rational c = t.coeff;
    Exponents e = t.exponents;
    for (int j = 0; j <= a; ++j) {
      const int idx = ring.u(j).index;
      if (e[idx] != 0) {
        c *= caches[j].get(e[idx]);
        e[idx] = 0;
      }
    }
    acc.add(e, c);
  }
  return acc.finish();
}

MultiPoly evaluate(const MultiPoly& p, Var v, const Rational& value) {
  if (sgn(value) == 0 && min_degree(p, v) < 0)
    throw DomainError("evaluating a negative power of " + p.ring().name(v) +
                      " at zero");
  PowerCache cache(value);
  TermAccumulator acc(p.ring());
  for (const Term& t : p.terms()) {
    Exponents e = t.exponents;
    const int k = e[v.index];
    e[v.index] = 0;
    if (k == 0) {
      acc.add(e, t.coeff);
    } else if (sgn(value) != 0) {
      acc.add_product(e, t.coeff, cache.get(k));
    }
  }
  return acc.finish();
}

MultiPoly truncate_z(const MultiPoly& p, TruncOrder n) {
  std::vector<Term> kept;
  kept.reserve(p.size());
  for (const Term& t : p.terms()) {
    if (t.exponents[kZ.index] <= n.n()) kept.push_back(t);
  }
  return MultiPoly::from_terms(p.ring(), std::move(kept));
}

MultiPoly coefficient(const MultiPoly& p, Var v, int k) {
  std::vector<Term> kept;
  for (const Term& t : p.terms()) {
    if (t.exponents[v.index] == k) {
      Term s = t;
      s.exponents[v.index] = 0;
      kept.push_back(std::move(s));
    }
  }
  return MultiPoly::from_terms(p.ring(), std::move(kept));
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q, Var v) {
  require_same_ring(p, q);
  if (q.is_zero()) throw DomainError("division by zero");
  const int dq = degree(q, v);
  const MultiPoly lead = coefficient(q, v, dq);
  if (lead.size() != 1)
    throw DomainError("leading coefficient of the divisor is not a monomial");
  Term inv = lead.terms()[0];
  for (auto& e : inv.exponents) e = -e;
  inv.coeff = 1 / inv.coeff;
  const MultiPoly lead_inv = MultiPoly::from_terms(p.ring(), {inv});
  MultiPoly quotient(p.ring());
  MultiPoly rem = p;
  while (!rem.is_zero() && degree(rem, v) >= dq) {
    const int dr = degree(rem, v);
    const MultiPoly step =
        coefficient(rem, v, dr) * lead_inv * MultiPoly::variable(p.ring(), v, dr - dq);
    quotient += step;
    rem -= step * q;
  }
  if (!rem.is_zero()) throw DomainError("division leaves a nonzero remainder");
  return quotient;
}

int degree(const MultiPoly& p, Var v) {
  if (p.is_zero()) return -1;
  int d = std::numeric_limits<int>::min();
  for (const Term& t : p.terms()) d = std::max(d, int{t.exponents[v.index]});
  return d;
}

int min_degree(const MultiPoly& p, Var v) {
  int d = 0;
  bool first = true;
  for (const Term& t : p.terms()) {
    d = first ? t.exponents[v.index] : std::min(d, int{t.exponents[v.index]});
    first = false;
  }
  return d;
}

namespace {

long partial_degree(const Term& t, std::span<const Var> vars) {
  long d = 0;
  for (Var v : vars) d += t.exponents[v.index];
  return d;
}

}  // namespace

int total_degree(const MultiPoly& p, std::span<const Var> vars) {
  if (p.is_zero()) return -1;
  long d = std::numeric_limits<long>::min();
  for (const Term& t : p.terms()) d = std::max(d, partial_degree(t, vars));
  return static_cast<int>(d);
}

MultiPoly leading_form(const MultiPoly& p, std::span<const Var> vars) {
  const int d = total_degree(p, vars);
  std::vector<Term> kept;
  for (const Term& t : p.terms()) {
    if (partial_degree(t, vars) == d) kept.push_back(t);
  }
  return MultiPoly::from_terms(p.ring(), std::move(kept));
}

MultiPoly generic_u(const VarTable& ring) {
  MultiPoly u(ring);
  for (int j = 0; j <= ring.a(); ++j)
    u += MultiPoly::variable(ring, ring.u(j)) * MultiPoly::variable(ring, kY, j);
  return u;
}

}  // namespace planaut
