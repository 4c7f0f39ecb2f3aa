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

#include "openforge/ngram_stats.h"

#include <algorithm>
#include <cctype>

namespace openforge {

namespace {

bool StartsUpper(const std::string &s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

bool IsOpenParen(const Token &t) { return t.pos == "-LRB-" || t.surface == "("; }
bool IsCloseParen(const Token &t) { return t.pos == "-RRB-" || t.surface == ")"; }
bool IsOpenQuote(const Token &t) {
  return t.pos == "``" || t.surface == "\"" || t.surface == "``";
}
bool IsCloseQuote(const Token &t) {
  return t.pos == "''" || t.surface == "\"" || t.surface == "''";
}
bool IsDash(const Token &t) {
  return t.pos == "HYPH" || t.surface == "-" || t.surface == "--";
}

}  // namespace

const std::string &PhraseStats::DominantPosPattern() const {
  static const std::string kEmpty;
  const std::string *best = &kEmpty;
  int best_count = -1;
  for (const auto &[pattern, count] : pos_patterns) {
    if (count > best_count) {
      best = &pattern;
      best_count = count;
    }
  }
  return *best;
}

std::string PhraseKey(const Sentence &sentence, int begin, int end) {
  std::string key;
  for (int i = begin; i < end; ++i) {
    if (i > begin) key.push_back(' ');
    key += sentence.tokens[i].lemma;
  }
  return key;
}

bool SpanCrossesPunctuation(const Sentence &sentence, int begin, int end) {
  if (end - begin < 2) return false;
  for (int i = begin; i < end; ++i) {
    if (IsPunctuation(sentence.tokens[i])) return true;
  }
  return false;
}

CorpusStats CorpusStats::Build(const Corpus &corpus, int max_len) {
  CorpusStats stats;
  stats.max_len_ = max_len;
  stats.totals_.assign(max_len + 1, 0);
  for (const Sentence &sentence : corpus.sentences) stats.AddSentence(sentence);
  stats.FinalizeSuperphrases();
  return stats;
}

void CorpusStats::AddSentence(const Sentence &sentence) {
  const int n = sentence.size();
  for (int begin = 0; begin < n; ++begin) {
    std::string key;
    std::string tags;
    bool all_upper = true;
    for (int end = begin + 1; end <= n && end - begin <= max_len_; ++end) {
      const Token &last = sentence.tokens[end - 1];
      if (end - begin >= 2 && IsPunctuation(last)) break;
      if (end - begin == 2 && IsPunctuation(sentence.tokens[begin])) break;
      if (end > begin + 1) {
        key.push_back(' ');
        tags.push_back(' ');
      }
      key += last.lemma;
      tags += last.pos;
      all_upper = all_upper && StartsUpper(last.surface);

      PhraseStats &ps = phrases_[key];
      ps.length = end - begin;
      ++ps.count;
      ++totals_[end - begin];
      ++ps.pos_patterns[tags];
      if (StartsUpper(sentence.tokens[begin].surface)) ++ps.first_capitalized;
      if (all_upper) ++ps.all_capitalized;
      bool has_prev = begin > 0;
      bool has_next = end < n;
      if (has_prev && has_next && IsOpenParen(sentence.tokens[begin - 1]) &&
          IsCloseParen(sentence.tokens[end])) {
        ++ps.in_parenthesis;
      }
      if (has_prev && has_next && IsOpenQuote(sentence.tokens[begin - 1]) &&
          IsCloseQuote(sentence.tokens[end])) {
        ++ps.in_quote;
      }
      if (has_next && IsDash(sentence.tokens[end])) ++ps.dash_after;
    }
  }
}

void CorpusStats::Merge(const CorpusStats &other) {
  if (other.max_len_ > max_len_) {
    max_len_ = other.max_len_;
    totals_.resize(max_len_ + 1, 0);
  }
  for (size_t l = 0; l < other.totals_.size(); ++l) totals_[l] += other.totals_[l];
  for (const auto &[key, src] : other.phrases_) {
    PhraseStats &dst = phrases_[key];
    dst.length = src.length;
    dst.count += src.count;
    dst.first_capitalized += src.first_capitalized;
    dst.all_capitalized += src.all_capitalized;
    dst.in_parenthesis += src.in_parenthesis;
    dst.in_quote += src.in_quote;
    dst.dash_after += src.dash_after;
    for (const auto &[p, c] : src.pos_patterns) dst.pos_patterns[p] += c;
  }
  FinalizeSuperphrases();
}

void CorpusStats::FinalizeSuperphrases() {
  for (auto &[key, ps] : phrases_) ps.max_superphrase = 0;
  for (const auto &[key, ps] : phrases_) {
    if (ps.length < 2) continue;
    // Prefix and suffix of a length-L phrase are its length-(L-1) parts.
    size_t last_space = key.rfind(' ');
    size_t first_space = key.find(' ');
    for (std::string part : {key.substr(0, last_space), key.substr(first_space + 1)}) {
      auto it = phrases_.find(part);
      if (it != phrases_.end()) {
        it->second.max_superphrase = std::max(it->second.max_superphrase, ps.count);
      }
    }
  }
}

const PhraseStats *CorpusStats::Find(const std::string &phrase) const {
  auto it = phrases_.find(phrase);
  return it == phrases_.end() ? nullptr : &it->second;
}

long long CorpusStats::TotalPositions(int length) const {
  if (length < 0 || length >= static_cast<int>(totals_.size())) return 0;
  return totals_[length];
}

double CorpusStats::OccurrenceProbability(const std::string &phrase) const {
  const PhraseStats *ps = Find(phrase);
  if (ps == nullptr) return 0.0;
  long long total = TotalPositions(ps->length);
  return total == 0 ? 0.0 : static_cast<double>(ps->count) / total;
}

}  // namespace openforge
