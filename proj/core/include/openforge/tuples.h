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

#ifndef OPENFORGE_TUPLES_H_
#define OPENFORGE_TUPLES_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "openforge/corpus.h"
#include "openforge/dep_tree.h"
#include "openforge/quality.h"
#include "openforge/segmentation.h"

namespace openforge {

struct EntityMention {
  std::string sentence_id;
  int sentence_index = 0;
  TokenSpan span;
  std::string phrase;  // normalized key; also the embedding key
  int head_word = 0;   // SpanHeadWord of span

  bool operator==(const EntityMention &o) const {
    return sentence_index == o.sentence_index && span == o.span;
  }
};

struct EntityPair {
  EntityMention head;
  EntityMention tail;
  int dep_distance = 0;
};

// Type-e segments of a segmentation, in sentence order.
std::vector<EntityMention> EntityMentions(const Sentence &sentence,
                                          int sentence_index,
                                          const Segmentation &segmentation);

// Tokens strictly between two spans (0 if they touch or overlap).
int LinearDistance(TokenSpan a, TokenSpan b);

// True if the mention's head word carries an nsubj-family relation.
bool IsSubjectMention(const Sentence &sentence, const EntityMention &mention);

// Other mentions ordered by dependency distance to the tail, then subject
// relation first, then linear distance, then position. At most `limit`.
std::vector<EntityMention> RankSubjects(const DepTree &tree,
                                        const Sentence &sentence,
                                        std::span<const EntityMention> mentions,
                                        const EntityMention &tail, int limit);

// Attaches each non-subject mention, as tail, to its nearest subject. When
// two mentions pick each other only the left-to-right pair survives. A
// sentence with fewer than two mentions yields no pairs.
std::vector<EntityPair> InitPositivePairs(const Sentence &sentence,
                                          int sentence_index,
                                          const Segmentation &segmentation);

struct SemanticPath {
  std::vector<int> tokens;     // sentence token indices, ascending
  std::vector<bool> expanded;  // parallel: true if added by expansion
};

// Tree path between the pair's head words plus the particle, preposition,
// infinitival "to", auxiliary and copula dependents of path nodes, in
// sentence order. Tokens inside the pair's spans or any `blocked` span are
// left out.
SemanticPath ExpandSemanticPath(const DepTree &tree, const Sentence &sentence,
                                const EntityPair &pair,
                                std::span<const TokenSpan> blocked = {});

struct RelationTuple {
  std::string sentence_id;
  int sentence_index = 0;
  EntityMention head;
  EntityMention tail;
  std::vector<std::string> predicate;              // relation phrases in order
  std::vector<std::vector<int>> predicate_tokens;  // sentence indices per phrase
  double confidence = 0;

  std::string PredicateText(const std::string &separator = " ") const;
};

// log sigma~(relation, head, tail); -inf rejects the relation phrase.
using CohesivenessFn = std::function<double(const std::string &relation,
                                            const std::string &head,
                                            const std::string &tail)>;

// The first joint round scores every relation phrase as fully cohesive.
CohesivenessFn IdentityCohesiveness();

// Probability of a phrase as a segment of the given type:
// delta^L * theta_u * Q_t(u); 0 for multi-token phrases not in the table.
class SegmentWeights {
 public:
  SegmentWeights(const SegmentationParams &params, const PhraseTable &table)
      : params_(&params), table_(&table) {}
  double Weight(const std::string &phrase, int length, SegmentType type) const;

 private:
  const SegmentationParams *params_;
  const PhraseTable *table_;
};

// Relation spans participate only above this log score.
inline constexpr double kMinRelationLogScore = -9.210340371976184;  // log(1e-4)

// Exact selection over tilings of path positions [0, m): each segment is a
// relation phrase scored by relation_score(i, j) (nullopt if inadmissible) or
// a single skipped token scored by skip_score(i). Returns relation spans and
// the full objective.
struct PathSelection {
  std::vector<std::pair<int, int>> relations;
  std::vector<double> relation_scores;
  double objective = 0;
};
PathSelection SelectRelationPhrases(
    int m, int max_len,
    const std::function<std::optional<double>(int, int)> &relation_score,
    const std::function<double(int)> &skip_score);

// Best predicate along the semantic path. Confidence is the summed
// log sigma~ + log w of the chosen relation phrases. Returns nullopt when no
// relation phrase is chosen.
std::optional<RelationTuple> GenerateTuple(const Sentence &sentence,
                                           const EntityPair &pair,
                                           const SemanticPath &path,
                                           const SegmentWeights &weights,
                                           const CohesivenessFn &sigma,
                                           int epsilon);

}  // namespace openforge

#endif  // OPENFORGE_TUPLES_H_
