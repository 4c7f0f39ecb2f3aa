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

#include "openforge/candidates.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <regex>
#include <sstream>
#include <unordered_set>

#include "openforge/errors.h"

namespace openforge {

namespace {

// One letter per tag class; rules are regexes over these letters.
char TagClass(const std::string &tag) {
  if (tag == "DT" || tag == "PRP$" || tag == "PP$") return 'D';
  if (tag == "JJ" || tag == "JJR" || tag == "JJS") return 'J';
  if (tag == "NN" || tag == "NNS") return 'N';
  if (tag == "NNP" || tag == "NNPS") return 'P';
  if (tag == "IN") return 'I';
  if (tag.size() >= 2 && tag[0] == 'V' && tag[1] == 'B') return 'V';
  if (tag == "RP") return 'R';
  if (tag == "TO") return 'T';
  if (tag == "PRP") return 'O';
  if (tag == "RB" || tag == "RBR" || tag == "RBS") return 'B';
  return 'X';
}

struct Rule {
  PosPattern pattern;
  std::regex regex;
};

const std::vector<Rule> &Rules() {
  static const std::vector<Rule> kRules = {
      {PosPattern::kNounChunk, std::regex("D?J*N+")},
      {PosPattern::kProperNounChunk, std::regex("P+I?P+")},
      {PosPattern::kVerb, std::regex("V+")},
      {PosPattern::kVerbParticle, std::regex("V+[NJRODIT]")},
      {PosPattern::kVerbWordsParticle, std::regex("V+[NJBODIR]*[NJRODIT]")},
  };
  return kRules;
}

std::vector<std::string> SplitSpaces(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string part;
  while (in >> part) out.push_back(part);
  return out;
}

}  // namespace

bool IsEntityPattern(PosPattern p) {
  return p == PosPattern::kNounChunk || p == PosPattern::kProperNounChunk;
}

std::vector<PosPattern> MatchPosPatterns(std::span<const std::string> tags) {
  std::string classes;
  for (const std::string &t : tags) classes.push_back(TagClass(t));
  std::vector<PosPattern> matches;
  for (const Rule &rule : Rules()) {
    if (std::regex_match(classes, rule.regex)) matches.push_back(rule.pattern);
  }
  return matches;
}

std::vector<PhraseCandidate> GenerateCandidates(const Corpus &corpus,
                                                const CorpusStats &stats,
                                                const RunConfig &config) {
  std::map<std::string, PhraseCandidate> by_key;
  auto touch = [&](const std::string &key, const PhraseStats &ps) -> PhraseCandidate & {
    PhraseCandidate &c = by_key[key];
    if (c.phrase.empty()) {
      c.phrase = key;
      c.length = ps.length;
      c.count = ps.count;
      c.pos_pattern = ps.DominantPosPattern();
    }
    return c;
  };

  // Punctuation never forms a phrase on its own.
  std::set<std::string> punctuation;
  for (const Sentence &sentence : corpus.sentences) {
    for (const Token &t : sentence.tokens) {
      if (IsPunctuation(t)) punctuation.insert(t.lemma);
    }
  }

  for (const auto &[key, ps] : stats.phrases()) {
    if (ps.length > config.epsilon) continue;
    if (ps.length == 1 && punctuation.count(key)) continue;
    if (ps.length == 1 || ps.count >= config.min_support) {
      touch(key, ps).from_ngram = true;
    }
  }

  // Rule matching is independent of frequency.
  std::vector<std::string> tags;
  for (const Sentence &sentence : corpus.sentences) {
    const int n = sentence.size();
    for (int begin = 0; begin < n; ++begin) {
      tags.clear();
      for (int end = begin + 1; end <= n && end - begin <= config.epsilon; ++end) {
        if (SpanCrossesPunctuation(sentence, begin, end)) break;
        tags.push_back(sentence.tokens[end - 1].pos);
        auto matches = MatchPosPatterns(tags);
        if (matches.empty()) continue;
        std::string key = PhraseKey(sentence, begin, end);
        const PhraseStats *ps = stats.Find(key);
        if (ps == nullptr) continue;
        PhraseCandidate &c = touch(key, *ps);
        c.from_pos_pattern = true;
        for (PosPattern p : matches) {
          (IsEntityPattern(p) ? c.entity_pattern : c.relation_pattern) = true;
        }
      }
    }
  }

  std::vector<PhraseCandidate> out;
  out.reserve(by_key.size());
  for (auto &[key, c] : by_key) out.push_back(std::move(c));
  return out;
}

bool IsStopword(std::string_view lemma) {
  static const std::unordered_set<std::string_view> kStopwords = {
      "a",     "an",    "the",   "and",   "or",    "but",   "of",    "in",
      "on",    "at",    "to",    "for",   "with",  "by",    "from",  "as",
      "is",    "are",   "was",   "were",  "be",    "been",  "being", "it",
      "its",   "this",  "that",  "these", "those", "he",    "she",   "they",
      "we",    "you",   "i",     "his",   "her",   "their", "our",   "my",
      "not",   "no",    "so",    "than",  "then",  "there", "here",  "which",
      "who",   "whom",  "what",  "when",  "where", "how",   "all",   "any",
      "some",  "most",  "more",  "such",  "into",  "about", "over",  "after",
      "do",    "does",  "did",   "have",  "has",   "had",   "will",  "would",
      "can",   "could", "may",   "might", "shall", "should", "if",   "also"};
  return kStopwords.count(lemma) > 0;
}

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

FeatureVector ComputeFeatures(const PhraseCandidate &candidate,
                              const CorpusStats &stats) {
  const PhraseStats *ps = stats.Find(candidate.phrase);
  if (ps == nullptr) {
    throw LookupError("phrase '" + candidate.phrase + "' not in corpus stats");
  }
  FeatureVector f;
  const double count = ps->count;
  f.raw_frequency = count;
  f.occurrence_probability = stats.OccurrenceProbability(candidate.phrase);
  f.length = ps->length;

  std::vector<std::string> words = SplitSpaces(candidate.phrase);
  if (words.size() >= 2) {
    double worst = std::numeric_limits<double>::infinity();
    for (size_t split = 1; split < words.size(); ++split) {
      std::string left, right;
      for (size_t i = 0; i < words.size(); ++i) {
        std::string &side = i < split ? left : right;
        if (!side.empty()) side.push_back(' ');
        side += words[i];
      }
      double pl = stats.OccurrenceProbability(left);
      double pr = stats.OccurrenceProbability(right);
      if (pl > 0 && pr > 0) {
        worst = std::min(worst, std::log(f.occurrence_probability / (pl * pr)));
      }
    }
    f.concordance = std::isfinite(worst) ? worst : 0.0;
  }
  f.completeness = std::clamp(1.0 - ps->max_superphrase / count, 0.0, 1.0);

  f.in_parenthesis = 2 * ps->in_parenthesis > ps->count;
  f.in_quote = 2 * ps->in_quote > ps->count;
  f.dash_after = 2 * ps->dash_after > ps->count;

  int stop = 0;
  for (const std::string &w : words) stop += IsStopword(w) ? 1 : 0;
  if (!words.empty()) {
    f.first_is_stopword = IsStopword(words.front());
    f.last_is_stopword = IsStopword(words.back());
    f.stopword_ratio = static_cast<double>(stop) / words.size();
  }
  f.first_capitalized = 2 * ps->first_capitalized > ps->count;
  f.all_capitalized = 2 * ps->all_capitalized > ps->count;
  f.entity_pattern = candidate.entity_pattern;
  f.relation_pattern = candidate.relation_pattern;

  // Tags are hashed by coarse class so that rare Penn variants share buckets.
  std::vector<std::string> tags = SplitSpaces(candidate.pos_pattern);
  if (!tags.empty()) {
    constexpr int kB = FeatureVector::kHashBuckets;
    std::string classes;
    for (const std::string &t : tags) classes.push_back(TagClass(t));
    f.first_tag_bucket = static_cast<int>(Fnv1a(classes.substr(0, 1)) % kB);
    f.last_tag_bucket = static_cast<int>(Fnv1a(classes.substr(classes.size() - 1)) % kB);
    for (size_t i = 0; i < classes.size(); ++i) {
      f.pos_unigrams[Fnv1a(classes.substr(i, 1)) % kB] += 1.0 / classes.size();
    }
    for (size_t i = 0; i + 1 < classes.size(); ++i) {
      f.pos_bigrams[Fnv1a(classes.substr(i, 2)) % kB] += 1.0 / (classes.size() - 1);
    }
  }
  return f;
}

std::array<double, FeatureVector::kSize> FeatureVector::ToArray() const {
  std::array<double, kSize> a{};
  int i = 0;
  a[i++] = std::log1p(raw_frequency);
  a[i++] = occurrence_probability;
  a[i++] = concordance;
  a[i++] = completeness;
  a[i++] = in_parenthesis;
  a[i++] = in_quote;
  a[i++] = dash_after;
  a[i++] = first_is_stopword;
  a[i++] = last_is_stopword;
  a[i++] = stopword_ratio;
  a[i++] = first_capitalized;
  a[i++] = all_capitalized;
  a[i++] = length;
  a[i++] = entity_pattern;
  a[i++] = relation_pattern;
  a[i++] = first_tag_bucket;
  a[i++] = last_tag_bucket;
  for (double v : pos_unigrams) a[i++] = v;
  for (double v : pos_bigrams) a[i++] = v;
  return a;
}

}  // namespace openforge
