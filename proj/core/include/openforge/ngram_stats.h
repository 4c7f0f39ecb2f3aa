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

#ifndef OPENFORGE_NGRAM_STATS_H_
#define OPENFORGE_NGRAM_STATS_H_

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "openforge/corpus.h"

namespace openforge {

// Occurrence statistics of one normalized n-gram.
struct PhraseStats {
  int length = 0;
  int count = 0;
  int first_capitalized = 0;  // occurrences whose first token starts uppercase
  int all_capitalized = 0;    // occurrences where every token does
  int in_parenthesis = 0;
  int in_quote = 0;
  int dash_after = 0;
  int max_superphrase = 0;    // largest count of a one-token extension
  std::map<std::string, int> pos_patterns;  // space-joined tags -> count

  // Most frequent tag sequence; ties go to the lexicographically smallest.
  const std::string &DominantPosPattern() const;
};

// Normalized key of sentence tokens [begin, end): lemmas joined by spaces.
std::string PhraseKey(const Sentence &sentence, int begin, int end);

// True if a multi-token span contains a punctuation token. Such spans are
// never counted or proposed as phrases.
bool SpanCrossesPunctuation(const Sentence &sentence, int begin, int end);

// Counts every n-gram up to max_len over lemma keys. Multi-token n-grams that
// cross punctuation are skipped; every unigram counts.
class CorpusStats {
 public:
  CorpusStats() = default;

  // Builds from one corpus. Merge() combines partial counts, so Build over
  // shards followed by Merge equals Build over the whole corpus.
  static CorpusStats Build(const Corpus &corpus, int max_len);
  void AddSentence(const Sentence &sentence);
  void Merge(const CorpusStats &other);

  const PhraseStats *Find(const std::string &phrase) const;
  long long TotalPositions(int length) const;
  // count / TotalPositions(length); 0 for unknown phrases.
  double OccurrenceProbability(const std::string &phrase) const;

  int max_len() const { return max_len_; }
  const std::unordered_map<std::string, PhraseStats> &phrases() const {
    return phrases_;
  }

 private:
  void FinalizeSuperphrases();

  int max_len_ = 0;
  std::unordered_map<std::string, PhraseStats> phrases_;
  std::vector<long long> totals_;  // indexed by length
};

}  // namespace openforge

#endif  // OPENFORGE_NGRAM_STATS_H_
