// Copyright 2026 The OpenForge Authors.
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

#ifndef OPENFORGE_SEEDS_H_
#define OPENFORGE_SEEDS_H_

#include <set>
#include <string>
#include <string_view>

namespace openforge {

// Distant-supervision seed phrases. Entries are lowercased and
// single-space normalized.
struct SeedLexicon {
  std::set<std::string> entity_seeds;
  std::set<std::string> relation_seeds;
};

// Lowercases and collapses runs of whitespace to one space.
std::string NormalizePhrase(std::string_view phrase);

// Parses "E\t<phrase>" / "R\t<phrase>" lines. Blank lines and lines starting
// with '#' are ignored. Throws FormatError naming the line otherwise.
SeedLexicon ParseSeedLexicon(std::string_view text);
SeedLexicon LoadSeedLexicon(const std::string &path);

}  // namespace openforge

#endif  // OPENFORGE_SEEDS_H_
