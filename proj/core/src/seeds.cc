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

#include "openforge/seeds.h"

#include <fstream>
#include <sstream>

#include "openforge/corpus.h"
#include "openforge/errors.h"

namespace openforge {

std::string NormalizePhrase(std::string_view phrase) {
  std::string out;
  bool pending_space = false;
  for (char c : phrase) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return Lowercase(out);
}

SeedLexicon ParseSeedLexicon(std::string_view text) {
  SeedLexicon lexicon;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (NormalizePhrase(line).empty() || line.front() == '#') continue;
    if (line.size() < 2 || line[1] != '\t' || (line[0] != 'E' && line[0] != 'R')) {
      throw FormatError("expected 'E<TAB>phrase' or 'R<TAB>phrase'", line_no);
    }
    std::string phrase = NormalizePhrase(std::string_view(line).substr(2));
    if (phrase.empty()) throw FormatError("empty seed phrase", line_no);
    (line[0] == 'E' ? lexicon.entity_seeds : lexicon.relation_seeds)
        .insert(std::move(phrase));
  }
  return lexicon;
}

SeedLexicon LoadSeedLexicon(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open seed lexicon '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseSeedLexicon(buffer.str());
}

}  // namespace openforge
