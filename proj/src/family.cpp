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

#include "planaut/family.hpp"

#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

#include "planaut/decompose.hpp"
#include "planaut/errors.hpp"
#include "planaut/expr.hpp"
#include "planaut/inverse.hpp"
#include "planaut/triangular.hpp"

namespace planaut {

namespace {

// (-1)^c c!
Rational signed_factorial(int c) {
  return Rational(c % 2 == 0 ? factorial(c) : Integer(-factorial(c)));
}

MultiPoly y_polynomial(const VarTable& ring, std::span<const Rational> y) {
  MultiPoly out(ring);
  for (std::size_t j = 0; j < y.size(); ++j)
    out += MultiPoly::variable(ring, kY, static_cast<int>(j)) * y[j];
  return out;
}

void validate_target(const FamilyParams& params, const TargetTriangular& target) {
  if (static_cast<int>(target.y.size()) != params.source_degree() + 1)
    throw DomainError("target needs " +
                      std::to_string(params.source_degree() + 1) +
                      " coefficients y_0..y_{cd+a}, got " +
                      std::to_string(target.y.size()));
  if (sgn(target.y.back()) == 0)
    throw DomainError("target must have degree cd+a = " +
                      std::to_string(params.source_degree()));
  if (sgn(target.r) == 0 || sgn(target.s) == 0)
    throw DomainError("target needs r and s nonzero");
}

FamilyResult assemble(const FamilyParams& params, std::vector<Rational> x,
                      const TargetTriangular& target,
                      const std::vector<MultiPoly>& v_symbolic) {
  const int c = params.c;
  const VarTable ring = VarTable::with_laurent_z(params.a);
  const MultiPoly u = generic_u(VarTable(params.a));
  std::vector<MultiPoly> vbar;
  for (const MultiPoly& vk : v_symbolic)
    vbar.push_back(rebase(evaluate_u(vk, x), ring));
  MultiPoly ubar = rebase(evaluate_u(u, x), ring);
  MultiPoly e = vbar[c] * target.r - y_polynomial(ring, target.y);
  if (degree(e, kY) > c * params.d() - 1)
    throw std::logic_error("DegreeMismatch: deg E = " +
                           std::to_string(degree(e, kY)) + " exceeds cd-1");
  MultiPoly v(ring);
  for (int k = 0; k < c; ++k) v += vbar[k] * MultiPoly::variable(ring, kZ, k);

  const PlaneMap id = PlaneMap::identity(ring);
  FamilyResult result{params, target, std::move(x), std::move(vbar),
                      std::move(ubar), std::move(v), std::move(e),
                      id, id, id, id};
  rebuild_maps(result);
  return result;
}

std::vector<MultiPoly> symbolic_v(const FamilyParams& params) {
  return v_sequence(generic_u(VarTable(params.a)), params.b,
                    TruncOrder(params.c));
}

}  // namespace

void FamilyParams::validate() const {
  if (a < 2 || b < 2 || c < 1)
    throw DomainError("family needs a, b >= 2 and c >= 1");
  if (a > kMaxA) throw DomainError("a too large");
}

PlaneMap TargetTriangular::as_map(const VarTable& ring) const {
  return PlaneMap(MultiPoly::variable(ring, kX) * r + y_polynomial(ring, y),
                  MultiPoly::variable(ring, kY) * s + MultiPoly(ring, t));
}

TargetTriangular TargetTriangular::from_map(const PlaneMap& map) {
  const MultiPoly& f = map.f();
  const MultiPoly& g = map.g();
  for (int i = 0; i < f.ring().size(); ++i) {
    const Var v{i};
    if (v != kX && v != kY && (f.uses(v) || g.uses(v)))
      throw DomainError("target must be a map in X, Y over Q");
  }
  TargetTriangular target;
  const MultiPoly fx = coefficient(f, kX, 1);
  if (!fx.is_constant() || fx.is_zero() || degree(f, kX) != 1)
    throw DomainError("target F must be r*X + P(Y) with r != 0");
  target.r = fx.constant_term();
  const MultiPoly py = coefficient(f, kX, 0);
  for (int j = 0; j <= std::max(0, degree(py, kY)); ++j)
    target.y.push_back(coefficient(py, kY, j).constant_term());
  if (degree(g, kX) > 0 || degree(g, kY) != 1)
    throw DomainError("target G must be s*Y + t with s != 0");
  target.s = coefficient(g, kY, 1).constant_term();
  target.t = g.constant_term();
  return target;
}

Rational family_top_coefficient(const FamilyParams& params) {
  params.validate();
  const MultiPoly p = symbolic_v(params)[params.c] * signed_factorial(params.c);
  const TriangularCheck check = check_m_triangular(p, params.b * params.c + 1);
  const auto* witness = std::get_if<TriangularWitness>(&check);
  if (!witness)
    throw std::logic_error("(-1)^c c! v_c failed the triangularity check");
  return witness->q.back();
}

Rational solvable_top_target(const FamilyParams& params, const Rational& r,
                             const Rational& k) {
  // t_d q_top x_a^{bc+1} = y_top with t_d = r / ((-1)^c c!).
  return r * family_top_coefficient(params) *
         pow(k, params.b * params.c + 1) / signed_factorial(params.c);
}

FamilyResult build_family(const FamilyParams& params,
                          const TargetTriangular& target) {
  params.validate();
  validate_target(params, target);
  const int a = params.a;
  const int cd = params.c * params.d();
  const std::vector<MultiPoly> vs = symbolic_v(params);
  const MultiPoly p = vs[params.c] * signed_factorial(params.c);
  const std::vector<Rational> t(a + 1, target.r / signed_factorial(params.c));
  const std::vector<Rational> window(target.y.begin() + cd, target.y.end());
  std::vector<Rational> x;
  try {
    x = solve_top(p, params.b * params.c + 1, t, window);
  } catch (const NoRationalRoot& err) {
    std::ostringstream msg;
    msg << err.what()
        << "; the construction needs an algebraically closed field. "
        << "Rational solutions exist when y_" << params.source_degree()
        << " = r*q_top*k^" << params.b * params.c + 1 << "/((-1)^c c!) with "
        << "q_top = " << family_top_coefficient(params) << ", e.g. y_"
        << params.source_degree() << " = "
        << solvable_top_target(params, target.r, Rational(1)) << " for k = 1";
    throw NoRationalRoot(msg.str());
  }
  return assemble(params, std::move(x), target, vs);
}

TargetTriangular synthesize_target(const FamilyParams& params,
                                   std::span<const Rational> x,
                                   const Rational& r, const Rational& s,
                                   const Rational& t,
                                   std::span<const Rational> low) {
  params.validate();
  const int cd = params.c * params.d();
  if (static_cast<int>(low.size()) > cd)
    throw DomainError("low part of the target must have degree < cd");
  const MultiPoly vc = evaluate_u(symbolic_v(params)[params.c], x) * r;
  TargetTriangular target{r, std::vector<Rational>(params.source_degree() + 1),
                          s, t};
  for (std::size_t j = 0; j < low.size(); ++j) target.y[j] = low[j];
  for (int j = cd; j <= params.source_degree(); ++j)
    target.y[j] = coefficient(vc, kY, j).constant_term();
  return target;
}

FamilyResult build_family_from_x(const FamilyParams& params,
                                 std::span<const Rational> x,
                                 const TargetTriangular& target) {
  params.validate();
  validate_target(params, target);
  if (static_cast<int>(x.size()) != params.a + 1 || sgn(x.back()) == 0)
    throw DomainError("x needs a+1 entries with x_a != 0");
  const std::vector<MultiPoly> vs = symbolic_v(params);
  const MultiPoly vc = evaluate_u(vs[params.c], x) * target.r;
  for (int j = params.c * params.d(); j <= params.source_degree(); ++j) {
    if (coefficient(vc, kY, j).constant_term() != target.y[j])
      throw DomainError("target coefficient y_" + std::to_string(j) +
                        " differs from r*v_c(x)");
  }
  return assemble(params, std::vector<Rational>(x.begin(), x.end()), target,
                  vs);
}

void rebuild_maps(FamilyResult& result) {
  const FamilyParams& params = result.params;
  const VarTable& ring = result.ubar.ring();
  const int c = params.c;
  const MultiPoly x = MultiPoly::variable(ring, kX);
  const MultiPoly y = MultiPoly::variable(ring, kY);
  const MultiPoly z = MultiPoly::variable(ring, kZ);
  const TargetTriangular& target = result.target;
  result.tau1 = PlaneMap(MultiPoly::variable(ring, kZ, c) * x + result.ubar, y);
  result.tau2 = PlaneMap(x + z * MultiPoly::variable(ring, kY, params.b), y);
  result.tau3 = PlaneMap(
      MultiPoly::variable(ring, kZ, -c) * (x - result.v) * target.r -
          result.e + z * MultiPoly::variable(ring, kY, c * params.d() - 1),
      y * target.s + MultiPoly(ring, target.t));
  const PlaneMap swap = PlaneMap::swap(ring);
  result.sigma_z =
      compose_all({result.tau3, swap, result.tau2, swap, result.tau1});
}

bool check_cancellation(const FamilyResult& result) {
  const FamilyParams& params = result.params;
  const VarTable& ring = result.ubar.ring();
  const int c = params.c;
  const TruncOrder order(c);
  const MultiPoly inner =
      MultiPoly::variable(ring, kZ, c) * MultiPoly::variable(ring, kX) +
      result.ubar;
  const MultiPoly w =
      MultiPoly::variable(ring, kY) +
      MultiPoly::variable(ring, kZ) * pow_truncated(inner, params.b, order);
  const MultiPoly lhs =
      truncate_z(result.ubar - substitute(result.v, kY, w, order), order);
  return lhs == result.vbar[c] * MultiPoly::variable(ring, kZ, c);
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kExhausted:
      return "EXHAUSTED";
  }
  return "?";
}

bool FamilyReport::passed() const {
  for (const CheckResult& c : checks) {
    if (c.status != CheckStatus::kPass) return false;
  }
  return !checks.empty();
}

const CheckResult& FamilyReport::check(const std::string& id) const {
  for (const CheckResult& c : checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no check " + id);
}

std::string FamilyReport::to_text() const {
  std::ostringstream out;
  out << "family a=" << params.a << " b=" << params.b << " c=" << params.c
      << " d=" << params.d() << '\n';
  for (const CheckResult& c : checks) {
    out << '[' << to_string(c.status) << "] (" << c.id << ") "
        << c.description;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << "overall: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string FamilyReport::to_key_values() const {
  std::ostringstream out;
  out << "a=" << params.a << "\nb=" << params.b << "\nc=" << params.c
      << "\nd=" << params.d() << '\n';
  for (const CheckResult& c : checks) {
    std::string status = to_string(c.status);
    for (char& ch : status) ch = static_cast<char>(std::tolower(ch));
    out << "check." << c.id << '.' << c.key << '=' << status << '\n';
  }
  out << "samples=";
  for (std::size_t i = 0; i < samples.size(); ++i)
    out << (i ? "," : "") << samples[i].get_str();
  out << "\noverall=" << (passed() ? "pass" : "fail") << '\n';
  return out.str();
}

FamilyReport verify_family(const FamilyResult& result,
                           const TargetTriangular& target,
                           std::uint64_t seed) {
  const FamilyParams& params = result.params;
  const int a = params.a;
  const int b = params.b;
  const int cd1 = params.c * params.d() - 1;
  const PlaneMap& sigma = result.sigma_z;
  FamilyReport report{params, {}, {}};
  auto add = [&](std::string id, std::string key, std::string description,
                 bool ok, std::string detail) {
    report.checks.push_back({std::move(id), std::move(key),
                             std::move(description),
                             ok ? CheckStatus::kPass : CheckStatus::kFail,
                             std::move(detail)});
  };

  const int zmin = std::min(min_degree(sigma.f(), kZ), min_degree(sigma.g(), kZ));
  add("i", "no_negative_z", "sigma_Z has no negative powers of Z", zmin >= 0,
      "lowest Z-exponent " + std::to_string(zmin));

  {
    const MultiPoly jac = jacobian(sigma);
    const Rational expected = target.r * target.s;
    const bool ok = jac == MultiPoly(jac.ring(), expected);
    add("ii", "jacobian", "jacobian(sigma_Z) = r*s", ok,
        "jacobian = " + (jac.size() <= 4 ? format_poly(jac)
                                         : std::to_string(jac.size()) +
                                               " terms") +
            ", r*s = " + expected.get_str());
  }

  {
    const PlaneMap tau = target.as_map(VarTable(a));
    bool ok = false;
    std::string detail;
    try {
      const PlaneMap limit = limit_mod_z(sigma);
      ok = limit == tau;
      detail = ok ? "limit = (" + format_poly(limit.f()) + ", " +
                        format_poly(limit.g()) + ")"
                  : "limit mismatch: got (" + format_poly(limit.f()) + ", " +
                        format_poly(limit.g()) + "), expected (" +
                        format_poly(tau.f()) + ", " + format_poly(tau.g()) +
                        ")";
    } catch (const NegativeZPower& err) {
      detail = std::string("NegativeZPower: ") + err.what();
    }
    add("iii", "limit", "sigma_Z mod Z equals tau", ok, detail);
  }

  {
    const int d1 = degree(result.tau1);
    const int d2 = degree(result.tau2);
    const int d3 = degree(result.tau3);
    add("iv", "factor_degrees", "deg tau1 = a, deg tau2 = b, deg tau3 = cd-1",
        d1 == a && d2 == b && d3 == cd1,
        "got (" + std::to_string(d1) + ", " + std::to_string(d2) + ", " +
            std::to_string(d3) + "), expected (" + std::to_string(a) + ", " +
            std::to_string(b) + ", " + std::to_string(cd1) + ")");
  }

  {
    const int deg = degree(sigma);
    const int expected = a * b * cd1;
    add("v", "total_degree", "deg sigma_Z = ab(cd-1)", deg == expected,
        "got " + std::to_string(deg) + ", expected " + std::to_string(expected));
  }

  {
    const Polydegree expected({cd1, b, a});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 12);
    std::uniform_int_distribution<int> den(1, 12);
    std::uniform_int_distribution<int> sign(0, 1);
    CheckResult check{"vi", "specialized_polydegree",
                      "sigma_z0 has polydegree " + expected.to_string(),
                      CheckStatus::kExhausted, ""};
    std::ostringstream seen;
    for (int attempt = 0; attempt < 5; ++attempt) {
      Rational z0(num(rng) * (sign(rng) ? -1 : 1), den(rng));
      z0.canonicalize();
      report.samples.push_back(z0);
      try {
        const Polydegree got = decompose(specialize_z(sigma, z0)).polydegree;
        if (got == expected) {
          check.status = CheckStatus::kPass;
          check.detail = "z0 = " + z0.get_str();
          break;
        }
        seen << (attempt ? ", " : "") << got.to_string() << " at z0 = "
             << z0.get_str();
      } catch (const NotAutomorphism& err) {
        check.status = CheckStatus::kFail;
        check.detail = "z0 = " + z0.get_str() + ": NotAutomorphism: " +
                       err.what();
        break;
      }
    }
    if (check.status == CheckStatus::kExhausted)
      check.detail = "5 degenerate specializations: " + seen.str();
    report.checks.push_back(std::move(check));
  }

  {
    const Polydegree expected({params.source_degree()});
    std::string detail;
    bool ok = false;
    try {
      const Polydegree got = decompose(target.as_map(VarTable(a))).polydegree;
      ok = got == expected;
      detail = "got " + got.to_string();
    } catch (const NotAutomorphism& err) {
      detail = std::string("NotAutomorphism: ") + err.what();
    }
    add("vii", "target_polydegree", "tau has polydegree " + expected.to_string(),
        ok, detail);
  }
  return report;
}

std::string CounterexampleReport::to_text() const {
  std::ostringstream out;
  const auto& t = target.entries();
  out << "a=" << a << " b=" << b << " c=" << c << " d=" << d << '\n'
      << "source polydegree " << source.to_string() << ", dimension "
      << source_dimension << '\n'
      << "target polydegree " << target.to_string() << ", dimension "
      << target_dimension << '\n'
      << "preceq " << source.to_string() << " <= " << target.to_string()
      << ": " << (preceq ? "true" : "false") << " (" << source.entries()[0]
      << (preceq ? " <= " : " > ") << t[0] + t[1] + t[2] - 2 << ")\n"
      << "closure inclusion holds via the degeneration family while preceq "
      << (preceq ? "also holds" : "fails") << '\n'
      << "note: the reversed target (" << t[2] << ',' << t[1] << ',' << t[0]
      << ") is the polydegree of the inverse\n";
  return out.str();
}

std::string CounterexampleReport::to_key_values() const {
  std::ostringstream out;
  out << "a=" << a << "\nb=" << b << "\nc=" << c << "\nd=" << d
      << "\nsource=" << source.to_string() << "\ntarget=" << target.to_string()
      << "\ndim_source=" << source_dimension
      << "\ndim_target=" << target_dimension
      << "\npreceq=" << (preceq ? "true" : "false") << '\n';
  return out.str();
}

CounterexampleReport counterexample_report(int a, int c) {
  if (a < 2 || c < 1) throw DomainError("counterexample needs a >= 2, c >= 1");
  const int d = 2 * a - 1;
  const Polydegree source({c * d + a});
  const Polydegree target({c * d - 1, 2, a});
  return CounterexampleReport{a,
                              c,
                              2,
                              d,
                              source,
                              target,
                              dimension(source),
                              dimension(target),
                              preceq(c * d + a, target)};
}

}  // namespace planaut
