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

#include "openforge/tuples.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

namespace openforge {

namespace {

bool IsExpansionDependent(const Token &t) {
  if (t.pos == "IN" || t.pos == "RP" || t.pos == "TO") return true;
  return t.deprel == "aux" || t.deprel == "aux:pass" || t.deprel == "auxpass" ||
         t.deprel == "cop";
}

std::string JoinLemmas(const Sentence &sentence, std::span<const int> tokens) {
  std::string out;
  for (int t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += sentence.tokens[t].lemma;
  }
  return out;
}

}  // namespace

std::vector<EntityMention> EntityMentions(const Sentence &sentence,
                                          int sentence_index,
                                          const Segmentation &segmentation) {
  std::vector<EntityMention> mentions;
  for (const Segment &s : segmentation.segments) {
    if (s.type != SegmentType::kEntity) continue;
    EntityMention m;
    m.sentence_id = sentence.id;
    m.sentence_index = sentence_index;
    m.span = {s.begin, s.end};
    m.phrase = s.phrase;
    m.head_word = SpanHeadWord(sentence, m.span);
    mentions.push_back(std::move(m));
  }
  return mentions;
}

int LinearDistance(TokenSpan a, TokenSpan b) {
  if (a.end <= b.begin) return b.begin - a.end;
  if (b.end <= a.begin) return a.begin - b.end;
  return 0;
}

bool IsSubjectMention(const Sentence &sentence, const EntityMention &mention) {
  return sentence.tokens[mention.head_word].deprel.rfind("nsubj", 0) == 0;
}

std::vector<EntityMention> RankSubjects(const DepTree &tree,
                                        const Sentence &sentence,
                                        std::span<const EntityMention> mentions,
                                        const EntityMention &tail, int limit) {
  using Key = std::tuple<int, int, int, int>;
  std::vector<std::pair<Key, int>> ranked;
  for (int i = 0; i < static_cast<int>(mentions.size()); ++i) {
    const EntityMention &m = mentions[i];
    if (m == tail) continue;
    Key key{tree.Distance(m.head_word, tail.head_word),
            IsSubjectMention(sentence, m) ? 0 : 1, LinearDistance(m.span, tail.span),
            m.span.begin};
    ranked.emplace_back(key, i);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<EntityMention> out;
  for (int i = 0; i < static_cast<int>(ranked.size()) && i < limit; ++i) {
    out.push_back(mentions[ranked[i].second]);
  }
  return out;
}

std::vector<EntityPair> InitPositivePairs(const Sentence &sentence,
                                          int sentence_index,
                                          const Segmentation &segmentation) {
  std::vector<EntityMention> mentions =
      EntityMentions(sentence, sentence_index, segmentation);
  std::vector<EntityPair> pairs;
  if (mentions.size() < 2) return pairs;
  DepTree tree(sentence);
  for (const EntityMention &tail : mentions) {
    // A subject is attached to objects, never the other way round.
    if (IsSubjectMention(sentence, tail)) continue;
    auto best = RankSubjects(tree, sentence, mentions, tail, 1);
    if (best.empty()) continue;
    EntityPair pair;
    pair.head = best.front();
    pair.tail = tail;
    pair.dep_distance = tree.Distance(pair.head.head_word, tail.head_word);
    pairs.push_back(std::move(pair));
  }
  // Two mentions that are each other's nearest neighbour keep only the
  // left-to-right reading.
  std::vector<EntityPair> kept;
  for (const EntityPair &p : pairs) {
    const bool reversed =
        p.tail.span.begin < p.head.span.begin &&
        std::any_of(pairs.begin(), pairs.end(), [&](const EntityPair &q) {
          return q.head == p.tail && q.tail == p.head;
        });
    if (!reversed) kept.push_back(p);
  }
  return kept;
}

SemanticPath ExpandSemanticPath(const DepTree &tree, const Sentence &sentence,
                                const EntityPair &pair,
                                std::span<const TokenSpan> blocked) {
  auto is_blocked = [&](int t) {
    if (pair.head.span.contains(t) || pair.tail.span.contains(t)) return true;
    return std::any_of(blocked.begin(), blocked.end(),
                       [t](const TokenSpan &s) { return s.contains(t); });
  };
  std::vector<int> nodes = tree.Path(pair.head.head_word, pair.tail.head_word);
  std::set<int> core;
  std::set<int> expansion;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const int node = nodes[i];
    if (i > 0 && i + 1 < nodes.size() && !is_blocked(node)) core.insert(node);
    for (int child : tree.children(node)) {
      if (!is_blocked(child) && IsExpansionDependent(sentence.tokens[child])) {
        expansion.insert(child);
      }
    }
  }
  SemanticPath path;
  std::set<int> all(core.begin(), core.end());
  all.insert(expansion.begin(), expansion.end());
  for (int t : all) {
    path.tokens.push_back(t);
    path.expanded.push_back(core.count(t) == 0);
  }
  return path;
}

std::string RelationTuple::PredicateText(const std::string &separator) const {
  std::string out;
  for (size_t i = 0; i < predicate.size(); ++i) {
    if (i > 0) out += separator;
    out += predicate[i];
  }
  return out;
}

CohesivenessFn IdentityCohesiveness() {
  return [](const std::string &, const std::string &, const std::string &) {
    return 0.0;
  };
}

double SegmentWeights::Weight(const std::string &phrase, int length,
                              SegmentType type) const {
  const PhraseInfo *info = table_->Find(phrase);
  double quality;
  if (info != nullptr) {
    quality = info->quality[static_cast<int>(type)];
  } else if (length == 1) {
    quality = 1.0 / 3.0;
  } else {
    return 0.0;
  }
  return std::pow(params_->delta, length) * params_->Theta(phrase, length) * quality;
}

PathSelection SelectRelationPhrases(
    int m, int max_len,
    const std::function<std::optional<double>(int, int)> &relation_score,
    const std::function<double(int)> &skip_score) {
  SpanScorer scorer = [&](int b, int e) -> std::optional<SpanChoice> {
    std::optional<double> rel = relation_score(b, e);
    SpanChoice choice;
    if (e - b == 1) {
      const double skip = skip_score(b);
      if (!rel || skip >= *rel) {
        choice.type = SegmentType::kBackground;
        choice.log_score = skip;
        return choice;
      }
    }
    if (!rel) return std::nullopt;
    choice.type = SegmentType::kRelation;
    choice.log_score = *rel;
    return choice;
  };
  Tiling tiling = DecodeBestTiling(m, std::max(1, max_len), scorer);
  PathSelection selection;
  selection.objective = tiling.log_prob;
  for (size_t i = 0; i < tiling.spans.size(); ++i) {
    if (tiling.choices[i].type == SegmentType::kRelation) {
      selection.relations.push_back(tiling.spans[i]);
      selection.relation_scores.push_back(tiling.choices[i].log_score);
    }
  }
  return selection;
}

std::optional<RelationTuple> GenerateTuple(const Sentence &sentence,
                                           const EntityPair &pair,
                                           const SemanticPath &path,
                                           const SegmentWeights &weights,
                                           const CohesivenessFn &sigma,
                                           int epsilon) {
  const int m = static_cast<int>(path.tokens.size());
  if (m == 0) return std::nullopt;
  auto phrase_of = [&](int b, int e) {
    return JoinLemmas(sentence, std::span<const int>(path.tokens).subspan(b, e - b));
  };
  auto relation_score = [&](int b, int e) -> std::optional<double> {
    const std::string phrase = phrase_of(b, e);
    const double w = weights.Weight(phrase, e - b, SegmentType::kRelation);
    if (!(w > 0)) return std::nullopt;
    const double log_sigma = sigma(phrase, pair.head.phrase, pair.tail.phrase);
    const double score = log_sigma + std::log(w);
    if (!(score > kMinRelationLogScore)) return std::nullopt;
    return score;
  };
  auto skip_score = [&](int i) {
    const double w =
        weights.Weight(sentence.tokens[path.tokens[i]].lemma, 1, SegmentType::kBackground);
    return std::log(std::max(w, std::numeric_limits<double>::min()));
  };
  PathSelection selection = SelectRelationPhrases(m, epsilon, relation_score, skip_score);
  if (selection.relations.empty()) return std::nullopt;

  RelationTuple tuple;
  tuple.sentence_id = sentence.id;
  tuple.sentence_index = pair.tail.sentence_index;
  tuple.head = pair.head;
  tuple.tail = pair.tail;
  for (size_t i = 0; i < selection.relations.size(); ++i) {
    auto [b, e] = selection.relations[i];
    tuple.predicate.push_back(phrase_of(b, e));
    tuple.predicate_tokens.emplace_back(path.tokens.begin() + b, path.tokens.begin() + e);
    tuple.confidence += selection.relation_scores[i];
  }
  return tuple;
}

}  // namespace openforge
