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

#ifndef OPENFORGE_TESTS_FIXTURES_H_
#define OPENFORGE_TESTS_FIXTURES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "openforge/corpus.h"
#include "openforge/segmentation.h"
#include "openforge/seeds.h"

namespace openforge::testing {

struct TokenSpec {
  std::string form;
  std::string pos;
  int head;  // 1-based, 0 for root
  std::string deprel;
};

// Lemmas are lowercased forms.
Sentence MakeSentence(const std::string &id, const std::vector<TokenSpec> &tokens);

// Segmentation with the given half-open spans typed as entities and every
// other token as a background unigram.
Segmentation EntitySegmentation(const Sentence &sentence,
                                const std::vector<std::pair<int, int>> &entities);

// "London is the most populous city and capital of England and the United
// Kingdom ." with United Kingdom attached to the root and England under it.
Sentence CapitalCityTree();
// Entity spans of CapitalCityTree: London, city, England, United Kingdom.
std::vector<std::pair<int, int>> CapitalCityEntities();

// "London is the most populous city of the United Kingdom ." parsed with
// city as root: London and United Kingdom are both one hop from city, and
// United Kingdom is the closer one in the sentence.
Sentence PopulousCityTree();
// Entity spans of PopulousCityTree: London, city, United Kingdom.
std::vector<std::pair<int, int>> PopulousCityEntities();

// Template corpus with proper-noun subjects, copular and verbal predicates
// and common-noun sentences. Deterministic in (num_sentences, seed).
Corpus SyntheticCorpus(int num_sentences, std::uint64_t seed);
Corpus SyntheticCorpusWithTokens(int min_tokens, std::uint64_t seed);
SeedLexicon SyntheticSeeds();
std::string SyntheticSeedText();

std::string DataPath(const std::string &name);

// Fresh directory under the system temp dir.
std::string MakeTempDir(const std::string &prefix);
void WriteText(const std::string &path, const std::string &text);

}  // namespace openforge::testing

#endif  // OPENFORGE_TESTS_FIXTURES_H_
