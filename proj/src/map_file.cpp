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

#include "planaut/map_file.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "planaut/errors.hpp"
#include "planaut/expr.hpp"

namespace planaut {

namespace {

struct Entry {
  std::string key;
  std::string value;
  int line;
  int column;  // of the first character of value
};

std::string trim(std::string_view s, std::size_t& offset) {
  std::size_t begin = 0;
  while (begin < s.size() && std::isspace(static_cast<unsigned char>(s[begin])))
    ++begin;
  std::size_t end = s.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
    --end;
  offset = begin;
  return std::string(s.substr(begin, end - begin));
}

std::vector<Entry> read_entries(std::string_view text) {
  std::vector<Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                      : nl - pos);
    ++line_no;
    std::size_t lead = 0;
    const std::string body = trim(line, lead);
    if (!body.empty() && body[0] != '#') {
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos)
        throw ParseError("expected 'Key: value'", line_no,
                         static_cast<int>(lead) + 1);
      std::size_t key_off = 0;
      std::size_t value_off = 0;
      std::string key = trim(line.substr(0, colon), key_off);
      std::string value = trim(line.substr(colon + 1), value_off);
      if (key.empty())
        throw ParseError("missing key", line_no, static_cast<int>(lead) + 1);
      entries.push_back({std::move(key), std::move(value), line_no,
                         static_cast<int>(colon + 1 + value_off) + 1});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return entries;
}

MultiPoly parse_entry(const Entry& entry, const VarTable& ring) {
  try {
    return parse_poly(entry.value, ring);
  } catch (const ParseError& err) {
    const std::string what = err.what();
    const std::string message = what.substr(what.find(": ") + 2);
    const int line = entry.line + err.line() - 1;
    const int column =
        err.line() == 1 ? entry.column + err.column() - 1 : err.column();
    throw ParseError(message, line, column);
  }
}

int parse_int(const Entry& entry) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(entry.value, &used);
    if (used != entry.value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + entry.key, entry.line,
                     entry.column);
  }
}

Rational parse_rational_entry(const Entry& entry, std::string_view text,
                              int column) {
  try {
    return parse_rational(text);
  } catch (const DomainError&) {
    throw ParseError("expected a rational for " + entry.key, entry.line,
                     column);
  }
}

std::vector<Rational> parse_rational_list(const Entry& entry) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = entry.value.find(',', start);
    const std::string_view piece = std::string_view(entry.value).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t off = 0;
    const std::string item = trim(piece, off);
    out.push_back(parse_rational_entry(
        entry, item, entry.column + static_cast<int>(start + off)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out << (i ? ", " : "") << values[i].get_str();
  return out.str();
}

}  // namespace

PlaneMap MapFile::plane_map() const {
  if (!f) throw ParseError("map file has no F line", 1, 1);
  if (!g) throw ParseError("map file has no G line", 1, 1);
  return PlaneMap(*f, *g);
}

MapFile parse_map_file(std::string_view text) {
  MapFile file;
  std::optional<VarTable> ring;
  for (const Entry& entry : read_entries(text)) {
    if (entry.key == "A") {
      if (ring) throw ParseError("duplicate A line", entry.line, 1);
      file.a = parse_int(entry);
      if (file.a < 1 || file.a > kMaxA)
        throw ParseError("A out of range", entry.line, entry.column);
      ring = VarTable::with_laurent_z(file.a);
    } else if (entry.key == "F" || entry.key == "G") {
      if (!ring) throw ParseError("A must precede F and G", entry.line, 1);
      auto& slot = entry.key == "F" ? file.f : file.g;
      if (slot) throw ParseError("duplicate " + entry.key + " line", entry.line, 1);
      slot = parse_entry(entry, *ring);
    } else {
      throw ParseError("unknown key '" + entry.key + "'", entry.line, 1);
    }
  }
  if (!ring) throw ParseError("map file has no A line", 1, 1);
  return file;
}

std::string format_map_file(const PlaneMap& map) {
  std::ostringstream out;
  out << "A: " << map.ring().a() << '\n'
      << "F: " << format_poly(map.f()) << '\n'
      << "G: " << format_poly(map.g()) << '\n';
  return out.str();
}

std::string format_family_record(const FamilyResult& result,
                                 std::uint64_t seed) {
  const FamilyParams& p = result.params;
  std::ostringstream out;
  out << "# degeneration family sigma_Z = tau3 pi tau2 pi tau1\n"
      << "a: " << p.a << "\nb: " << p.b << "\nc: " << p.c << "\nseed: " << seed
      << "\nr: " << result.target.r.get_str()
      << "\ns: " << result.target.s.get_str()
      << "\nt: " << result.target.t.get_str() << "\ny: " << join(result.target.y)
      << "\nx: " << join(result.x) << '\n';
  for (std::size_t k = 0; k < result.vbar.size(); ++k)
    out << "vbar" << k << ": " << format_poly(result.vbar[k]) << '\n';
  out << "Ubar: " << format_poly(result.ubar) << '\n'
      << "V: " << format_poly(result.v) << '\n'
      << "E: " << format_poly(result.e) << '\n';
  const std::pair<const char*, const PlaneMap*> maps[] = {
      {"tau1", &result.tau1},
      {"tau2", &result.tau2},
      {"tau3", &result.tau3},
      {"sigmaZ", &result.sigma_z}};
  for (const auto& [name, map] : maps) {
    out << name << ".F: " << format_poly(map->f()) << '\n'
        << name << ".G: " << format_poly(map->g()) << '\n';
  }
  return out.str();
}

FamilyRecord parse_family_record(std::string_view text) {
  std::map<std::string, Entry> by_key;
  for (Entry& entry : read_entries(text)) {
    const std::string key = entry.key;
    if (!by_key.emplace(key, std::move(entry)).second)
      throw ParseError("duplicate key '" + key + "'", by_key.at(key).line, 1);
  }
  auto get = [&](const std::string& key) -> const Entry& {
    auto it = by_key.find(key);
    if (it == by_key.end())
      throw ParseError("family record has no '" + key + "' line", 1, 1);
    return it->second;
  };
  FamilyParams params{parse_int(get("a")), parse_int(get("b")),
                      parse_int(get("c"))};
  params.validate();
  const VarTable ring = VarTable::with_laurent_z(params.a);
  auto poly = [&](const std::string& key) { return parse_entry(get(key), ring); };
  auto map = [&](const std::string& name) {
    return PlaneMap(poly(name + ".F"), poly(name + ".G"));
  };
  TargetTriangular target{
      parse_rational_entry(get("r"), get("r").value, get("r").column),
      parse_rational_list(get("y")),
      parse_rational_entry(get("s"), get("s").value, get("s").column),
      parse_rational_entry(get("t"), get("t").value, get("t").column)};
  std::vector<MultiPoly> vbar;
  for (int k = 0; k <= params.c; ++k) vbar.push_back(poly("vbar" + std::to_string(k)));
  const Entry& seed_entry = get("seed");
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(seed_entry.value);
  } catch (const std::exception&) {
    throw ParseError("expected an unsigned seed", seed_entry.line,
                     seed_entry.column);
  }
  FamilyResult result{params,       target,       parse_rational_list(get("x")),
                      std::move(vbar), poly("Ubar"), poly("V"),
                      poly("E"),    map("tau1"),  map("tau2"),
                      map("tau3"),  map("sigmaZ")};
  return FamilyRecord{std::move(result), seed};
}

}  // namespace planaut
