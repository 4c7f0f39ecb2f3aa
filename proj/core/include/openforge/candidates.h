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

#ifndef OPENFORGE_CANDIDATES_H_
#define OPENFORGE_CANDIDATES_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "openforge/config.h"
#include "openforge/corpus.h"
#include "openforge/ngram_stats.h"

namespace openforge {

// POS chunking rules used to propose infrequent phrases.
enum class PosPattern {
  kNounChunk,         // <DT|PRP$>?<JJ>*<NN>+
  kProperNounChunk,   // <NNP>+<IN>?<NNP>+
  kVerb,              // <VB*>+
  kVerbParticle,      // {V}{P}
  kVerbWordsParticle  // {V}{W}*{P}
};

bool IsEntityPattern(PosPattern p);

// Returns every pattern that matches the whole tag sequence.
std::vector<PosPattern> MatchPosPatterns(std::span<const std::string> tags);

struct PhraseCandidate {
  std::string phrase;  // normalized key, lemmas joined by spaces
  int length = 0;
  std::string pos_pattern;  // dominant tag sequence
  int count = 0;
  bool from_ngram = false;      // frequent n-gram
  bool from_pos_pattern = false;
  bool entity_pattern = false;  // some occurrence matched an entity rule
  bool relation_pattern = false;
};

// Union of unigrams, n-grams (2..epsilon tokens) with count >= min_support,
// and every span matching a POS rule. Sorted by phrase key.
std::vector<PhraseCandidate> GenerateCandidates(const Corpus &corpus,
                                                const CorpusStats &stats,
                                                const RunConfig &config);

struct FeatureVector {
  static constexpr int kHashBuckets = 16;

  double raw_frequency = 0;
  double occurrence_probability = 0;
  double concordance = 0;   // min pointwise association over binary splits
  double completeness = 0;  // 1 - max extension count / count, in [0, 1]
  bool in_parenthesis = false;
  bool in_quote = false;
  bool dash_after = false;
  bool first_is_stopword = false;
  bool last_is_stopword = false;
  double stopword_ratio = 0;
  bool first_capitalized = false;
  bool all_capitalized = false;
  int length = 0;
  bool entity_pattern = false;
  bool relation_pattern = false;
  int first_tag_bucket = 0;
  int last_tag_bucket = 0;
  std::array<double, kHashBuckets> pos_unigrams{};
  std::array<double, kHashBuckets> pos_bigrams{};

  static constexpr int kSize = 17 + 2 * kHashBuckets;
  std::array<double, kSize> ToArray() const;
};

bool IsStopword(std::string_view lemma);

// Stable 64-bit FNV-1a; used for hashed categorical features.
std::uint64_t Fnv1a(std::string_view text);

// Throws LookupError if the candidate is not in stats.
FeatureVector ComputeFeatures(const PhraseCandidate &candidate,
                              const CorpusStats &stats);

}  // namespace openforge

#endif  // OPENFORGE_CANDIDATES_H_
