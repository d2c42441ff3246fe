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
#include <optional>
#include <string>
#include <string_view>

#include "planaut/family.hpp"
#include "planaut/plane_map.hpp"

namespace planaut {

/// Map file:
///
///   # comment
///   A: 2
///   F: X + Y^3
///   G: Y
///
/// Expressions live in the table of the declared a, with u_a and Z Laurent.
struct MapFile {
  int a = 0;
  std::optional<MultiPoly> f;
  std::optional<MultiPoly> g;

  /// Both F and G; throws ParseError naming the missing line otherwise.
  PlaneMap plane_map() const;
};

/// Throws ParseError with the line and column of the offending text.
MapFile parse_map_file(std::string_view text);

std::string format_map_file(const PlaneMap& map);

/// Plain-text record of a built family, as written by build-family and read
/// by verify-family. Same "Key: value" layout as map files.
std::string format_family_record(const FamilyResult& result,
                                 std::uint64_t seed);

struct FamilyRecord {
  FamilyResult result;
  std::uint64_t seed;
};

FamilyRecord parse_family_record(std::string_view text);

}  // namespace planaut
