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

#include "planaut/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "planaut/decompose.hpp"
#include "planaut/errors.hpp"
#include "planaut/expr.hpp"
#include "planaut/family.hpp"
#include "planaut/inverse.hpp"
#include "planaut/map_file.hpp"
#include "planaut/triangular.hpp"

namespace planaut::cli {

namespace {

/// Unreadable input file; reported like a parse error.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), 1, 1);
    }
  }
  return out;
}

std::string index_string(const MultiIndex& k) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
  out << ')';
  return out.str();
}

struct Options {
  int a = 0;
  int b = 0;
  int c = 0;
  int m = 0;
  int n = 0;
  int k = 0;
  int r = 0;
  int order = 0;
  int lambda = 0;
  std::string at;
  std::string from_x;
  std::string tau;
  std::string file;
  std::vector<std::string> files;
  std::uint64_t seed = 1;
  bool seed_given = false;
};

int cmd_inverse(const Options& o, std::ostream& out) {
  const VarTable ring(o.a);
  const MultiPoly u = generic_u(ring);
  const InverseSeries inv = formal_inverse(u, o.b, TruncOrder(o.order));
  const std::vector<Rational> x = parse_list(o.at);
  for (std::size_t k = 0; k < inv.coeffs.size(); ++k) {
    const MultiPoly c = o.at.empty() ? inv.coeffs[k] : evaluate_u(inv.coeffs[k], x);
    out << 'a' << k << " = " << format_poly(c) << '\n';
  }
  return kOk;
}

int cmd_vseq(const Options& o, std::ostream& out) {
  const VarTable ring(o.a);
  const auto v = v_sequence(generic_u(ring), o.b, TruncOrder(o.order));
  for (std::size_t k = 0; k < v.size(); ++k)
    out << 'v' << k << " = " << format_poly(v[k]) << '\n';
  return kOk;
}

int cmd_wpoly(const Options& o, std::ostream& out) {
  const VarTable ring(o.a);
  const MultiPoly u = generic_u(ring);
  out << "w = " << format_poly(w_recursive(o.n, o.lambda, u)) << '\n';
  const DerivBasisCoeffs basis = w_basis(o.n, o.lambda, o.a);
  for (const auto& [k, q] : basis.table)
    out << "q" << index_string(k) << " = " << q.get_str() << '\n';
  return kOk;
}

int cmd_lemma(const Options& o, std::ostream& out) {
  const VarTable ring(o.a);
  const MultiPoly s = lemma_s(o.n, o.k, o.m, o.r, generic_u(ring), o.b);
  out << format_poly(s) << '\n';
  return s.is_zero() ? kOk : kVerificationFailed;
}

int cmd_check_triangular(const Options& o, std::ostream& out) {
  const MapFile file = parse_map_file(read_file(o.file));
  if (file.a != o.a)
    throw DomainError("--a " + std::to_string(o.a) + " does not match A: " +
                      std::to_string(file.a));
  if (!file.f) throw ParseError("map file has no F line", 1, 1);
  const MultiPoly p = rebase(*file.f, VarTable(o.a));
  const TriangularCheck check = check_m_triangular(p, o.m);
  if (const auto* fail = std::get_if<TriangularFailure>(&check)) {
    out << "not triangular: " << to_string(fail->reason) << " at l=" << fail->l
        << '\n';
    return kVerificationFailed;
  }
  const auto& w = std::get<TriangularWitness>(check);
  out << "triangular: m=" << w.m << " degree=" << w.degree << '\n';
  for (int j = 0; j <= o.a; ++j) {
    out << "l=" << w.degree - o.a + j << " q=" << w.q[j].get_str()
        << " P=" << format_poly(w.residuals[j]) << '\n';
  }
  return kOk;
}

int cmd_polydegree(const Options& o, std::ostream& out) {
  const MapFile file = parse_map_file(read_file(o.file));
  const PlaneMap map = file.plane_map();
  const VarTable ring(file.a);
  const Factorization fact =
      decompose(PlaneMap(rebase(map.f(), ring), rebase(map.g(), ring)));
  out << fact.polydegree.to_string() << '\n';
  return kOk;
}

int cmd_compose(const Options& o, std::ostream& out) {
  std::vector<PlaneMap> maps;
  for (const std::string& path : o.files)
    maps.push_back(parse_map_file(read_file(path)).plane_map());
  out << format_map_file(compose_all(maps));
  return kOk;
}

int cmd_build_family(const Options& o, std::ostream& out) {
  const FamilyParams params{o.a, o.b, o.c};
  params.validate();
  std::optional<TargetTriangular> given;
  if (!o.tau.empty()) {
    const MapFile file = parse_map_file(read_file(o.tau));
    if (file.a != o.a)
      throw DomainError("--a " + std::to_string(o.a) + " does not match A: " +
                        std::to_string(file.a));
    given = TargetTriangular::from_map(file.plane_map());
  }
  FamilyResult result = [&] {
    if (o.from_x.empty()) {
      if (!given) throw DomainError("build-family needs --tau or --from-x");
      return build_family(params, *given);
    }
    const std::vector<Rational> x = parse_list(o.from_x);
    const int cd = params.c * params.d();
    std::vector<Rational> low;
    Rational r(1), s(1), t(0);
    if (given) {
      r = given->r;
      s = given->s;
      t = given->t;
      for (int j = 0; j < cd && j < static_cast<int>(given->y.size()); ++j)
        low.push_back(given->y[j]);
    }
    const TargetTriangular target = synthesize_target(params, x, r, s, t, low);
    return build_family_from_x(params, x, target);
  }();
  const int m = params.b * params.c + 1;
  out << "# root condition: x_a^" << m << " = y_" << params.source_degree()
      << "*(-1)^c*c!/(r*q_top), q_top = "
      << family_top_coefficient(params).get_str() << "; y_"
      << params.source_degree() << " = "
      << solvable_top_target(params, result.target.r, Rational(1)).get_str()
      << " gives x_a = 1\n";
  out << format_family_record(result, o.seed);
  return kOk;
}

int cmd_verify_family(const Options& o, std::ostream& out) {
  std::string text;
  if (o.file.empty() || o.file == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    text = read_file(o.file);
  }
  const FamilyRecord record = parse_family_record(text);
  const std::uint64_t seed = o.seed_given ? o.seed : record.seed;
  const FamilyReport report =
      verify_family(record.result, record.result.target, seed);
  out << report.to_text() << '\n' << report.to_key_values();
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  const CounterexampleReport report = counterexample_report(o.a, o.c);
  out << report.to_text() << '\n' << report.to_key_values();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact plane-automorphism toolkit: formal inverses, "
               "triangular polynomials, polydegrees and degeneration families"};
  app.require_subcommand(1);
  Options o;

  auto* inverse = app.add_subcommand("inverse", "truncated formal inverse of Y + Z*U(Y)^b");
  inverse->add_option("--a", o.a)->required();
  inverse->add_option("--b", o.b)->required();
  inverse->add_option("--order", o.order)->required();
  inverse->add_option("--at", o.at, "specialize u0..ua at x0,...,xa");

  auto* vseq = app.add_subcommand("vseq", "coefficients v_k of U(I(Y,Z))");
  vseq->add_option("--a", o.a)->required();
  vseq->add_option("--b", o.b)->required();
  vseq->add_option("--order", o.order)->required();

  auto* wpoly = app.add_subcommand("wpoly", "w_{n,lambda} and its derivative-product coefficients");
  wpoly->add_option("--n", o.n)->required();
  wpoly->add_option("--lambda", o.lambda)->required();
  wpoly->add_option("--a", o.a)->required();

  auto* lemma = app.add_subcommand("lemma", "alternating sum S(n,k,m,r)");
  lemma->add_option("--n", o.n)->required();
  lemma->add_option("--k", o.k)->required();
  lemma->add_option("--m", o.m)->required();
  lemma->add_option("--r", o.r)->required();
  lemma->add_option("--a", o.a)->required();
  lemma->add_option("--b", o.b)->required();

  auto* tri = app.add_subcommand("check-triangular", "(m,U)-triangularity of the F line of a map file");
  tri->add_option("--m", o.m)->required();
  tri->add_option("--a", o.a)->required();
  tri->add_option("-f,--file", o.file)->required();

  auto* polydeg = app.add_subcommand("polydegree", "polydegree of a plane automorphism");
  polydeg->add_option("-f,--file", o.file)->required();

  auto* comp = app.add_subcommand("compose", "compose maps, outermost first");
  comp->add_option("-f,--file", o.files)->required();

  auto* build = app.add_subcommand("build-family", "build the degeneration family for a triangular target");
  build->add_option("--a", o.a)->required();
  build->add_option("--b", o.b)->required();
  build->add_option("--c", o.c)->required();
  build->add_option("--tau", o.tau, "map file of the target (rX + P(Y), sY + t)");
  build->add_option("--from-x", o.from_x, "use x0,...,xa and synthesize the target top");
  build->add_option("--seed", o.seed, "seed recorded for verification");

  auto* verify = app.add_subcommand("verify-family", "verify a build-family record");
  verify->add_option("-f,--file", o.file, "record file (default: standard input)");
  verify->add_option("--seed", o.seed, "override the recorded seed");

  auto* counter = app.add_subcommand("counterexample", "dimension and order arithmetic for b = 2");
  counter->add_option("--a", o.a)->required();
  counter->add_option("--c", o.c)->required();

  std::vector<const char*> argv;
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  o.seed_given = verify->count("--seed") > 0;

  try {
    if (*inverse) return cmd_inverse(o, out);
    if (*vseq) return cmd_vseq(o, out);
    if (*wpoly) return cmd_wpoly(o, out);
    if (*lemma) return cmd_lemma(o, out);
    if (*tri) return cmd_check_triangular(o, out);
    if (*polydeg) return cmd_polydegree(o, out);
    if (*comp) return cmd_compose(o, out);
    if (*build) return cmd_build_family(o, out);
    if (*verify) return cmd_verify_family(o, out);
    if (*counter) return cmd_counterexample(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotAutomorphism& e) {
    err << "NotAutomorphism: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const NoRationalRoot& e) {
    err << "NoRationalRoot: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kParseError;
}

}  // namespace planaut::cli
