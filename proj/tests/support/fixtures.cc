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

#include "fixtures.h"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

namespace openforge::testing {

namespace fs = std::filesystem;

Sentence MakeSentence(const std::string &id, const std::vector<TokenSpec> &tokens) {
  Sentence sentence;
  sentence.id = id;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const TokenSpec &t = tokens[i];
    sentence.tokens.push_back(
        Token{static_cast<int>(i) + 1, t.form, Lowercase(t.form), t.pos, t.head, t.deprel});
  }
  return sentence;
}

Segmentation EntitySegmentation(const Sentence &sentence,
                                const std::vector<std::pair<int, int>> &entities) {
  Segmentation seg;
  seg.sentence_id = sentence.id;
  int i = 0;
  while (i < sentence.size()) {
    Segment s;
    s.begin = i;
    s.end = i + 1;
    for (auto [b, e] : entities) {
      if (b == i) {
        s.end = e;
        s.type = SegmentType::kEntity;
      }
    }
    s.quality = 1;
    s.prob = 1;
    s.phrase = PhraseKey(sentence, s.begin, s.end);
    seg.segments.push_back(s);
    i = s.end;
  }
  return seg;
}

Sentence CapitalCityTree() {
  return MakeSentence("fig3b", {{"London", "NNP", 2, "nsubj"},
                                {"is", "VBZ", 0, "root"},
                                {"the", "DT", 6, "det"},
                                {"most", "RBS", 5, "advmod"},
                                {"populous", "JJ", 6, "amod"},
                                {"city", "NN", 8, "nmod"},
                                {"and", "CC", 8, "cc"},
                                {"capital", "NN", 2, "attr"},
                                {"of", "IN", 10, "case"},
                                {"England", "NNP", 14, "conj"},
                                {"and", "CC", 14, "cc"},
                                {"the", "DT", 14, "det"},
                                {"United", "NNP", 14, "compound"},
                                {"Kingdom", "NNP", 2, "obl"},
                                {".", ".", 2, "punct"}});
}

std::vector<std::pair<int, int>> CapitalCityEntities() {
  return {{0, 1}, {5, 6}, {9, 10}, {12, 14}};
}

Sentence PopulousCityTree() {
  return MakeSentence("populous", {{"London", "NNP", 6, "nsubj"},
                                   {"is", "VBZ", 6, "cop"},
                                   {"the", "DT", 6, "det"},
                                   {"most", "RBS", 5, "advmod"},
                                   {"populous", "JJ", 6, "amod"},
                                   {"city", "NN", 0, "root"},
                                   {"of", "IN", 10, "case"},
                                   {"the", "DT", 10, "det"},
                                   {"United", "NNP", 10, "compound"},
                                   {"Kingdom", "NNP", 6, "nmod"},
                                   {".", ".", 6, "punct"}});
}

std::vector<std::pair<int, int>> PopulousCityEntities() { return {{0, 1}, {5, 6}, {8, 10}}; }

namespace {

const std::vector<std::string> kPlaces = {
    "Amberg", "Brixen", "Corvan", "Dalmor", "Eskett", "Fennick", "Garrow",
    "Hollin", "Istrel", "Jorvik", "Kestrel", "Lunden", "Marrow", "Norhold",
    "Oskar", "Pellin", "Quarry", "Rodden", "Sallow", "Tamsin", "Umber",
    "Varrow", "Wendle", "Yarrow"};
const std::vector<std::string> kRoles = {"capital", "center", "part", "member",
                                         "heart"};
const std::vector<std::string> kVerbs = {"leads", "joins", "borders", "supplies"};
const std::vector<std::string> kNouns = {"museum", "park", "bridge", "festival",
                                         "harbor", "market"};
const std::vector<std::string> kAdjectives = {"famous", "large", "new", "old"};

template <typename T>
const T &Pick(const std::vector<T> &pool, std::mt19937_64 &rng) {
  return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
}

Sentence CopularSentence(const std::string &id, std::mt19937_64 &rng) {
  // X is/became the ROLE of Y .
  const std::string &subj = Pick(kPlaces, rng);
  std::string obj = Pick(kPlaces, rng);
  while (obj == subj) obj = Pick(kPlaces, rng);
  const bool past = rng() % 3 == 0;
  return MakeSentence(id, {{subj, "NNP", 4, "nsubj"},
                           {past ? "became" : "is", past ? "VBD" : "VBZ", 4, "cop"},
                           {"the", "DT", 4, "det"},
                           {Pick(kRoles, rng), "NN", 0, "root"},
                           {"of", "IN", 6, "case"},
                           {obj, "NNP", 4, "nmod"},
                           {".", ".", 4, "punct"}});
}

Sentence VerbalSentence(const std::string &id, std::mt19937_64 &rng) {
  // X VERB Y in the NOUN .
  const std::string &subj = Pick(kPlaces, rng);
  std::string obj = Pick(kPlaces, rng);
  while (obj == subj) obj = Pick(kPlaces, rng);
  return MakeSentence(id, {{subj, "NNP", 2, "nsubj"},
                           {Pick(kVerbs, rng), "VBZ", 0, "root"},
                           {obj, "NNP", 2, "obj"},
                           {"in", "IN", 6, "case"},
                           {"the", "DT", 6, "det"},
                           {Pick(kNouns, rng), "NN", 2, "obl"},
                           {".", ".", 2, "punct"}});
}

Sentence CommonNounSentence(const std::string &id, std::mt19937_64 &rng) {
  // The city has a ADJ NOUN .
  return MakeSentence(id, {{"The", "DT", 2, "det"},
                           {"city", "NN", 3, "nsubj"},
                           {"has", "VBZ", 0, "root"},
                           {"a", "DT", 6, "det"},
                           {Pick(kAdjectives, rng), "JJ", 6, "amod"},
                           {Pick(kNouns, rng), "NN", 3, "obj"},
                           {".", ".", 3, "punct"}});
}

}  // namespace

Corpus SyntheticCorpus(int num_sentences, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Corpus corpus;
  for (int i = 0; i < num_sentences; ++i) {
    const std::string id = "syn" + std::to_string(i + 1);
    switch (rng() % 3) {
      case 0: corpus.sentences.push_back(CopularSentence(id, rng)); break;
      case 1: corpus.sentences.push_back(VerbalSentence(id, rng)); break;
      default: corpus.sentences.push_back(CommonNounSentence(id, rng)); break;
    }
    corpus.doc_ids.push_back("synthetic");
  }
  return corpus;
}

Corpus SyntheticCorpusWithTokens(int min_tokens, std::uint64_t seed) {
  // Every template has seven tokens.
  return SyntheticCorpus((min_tokens + 6) / 7, seed);
}

std::string SyntheticSeedText() {
  std::string text = "# places and predicates of the synthetic templates\n";
  for (size_t i = 0; i < kPlaces.size(); i += 2) text += "E\t" + Lowercase(kPlaces[i]) + "\n";
  text += "E\tcity\nE\tmuseum\nE\tpark\n";
  text += "R\tcapital of\nR\tmember of\nR\tleads\nR\tjoins\nR\thas\n";
  return text;
}

SeedLexicon SyntheticSeeds() { return ParseSeedLexicon(SyntheticSeedText()); }

std::string DataPath(const std::string &name) {
  return (fs::path(OPENFORGE_TEST_DATA_DIR) / name).string();
}

std::string MakeTempDir(const std::string &prefix) {
  static std::atomic<int> counter{0};
  std::random_device rd;
  fs::path dir = fs::temp_directory_path() /
                 (prefix + "-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir.string();
}

void WriteText(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace openforge::testing
