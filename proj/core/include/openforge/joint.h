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

#ifndef OPENFORGE_JOINT_H_
#define OPENFORGE_JOINT_H_

#include <string>
#include <vector>

#include "openforge/config.h"
#include "openforge/corpus.h"
#include "openforge/embedding.h"
#include "openforge/seeds.h"
#include "openforge/segmentation.h"
#include "openforge/tuples.h"

namespace openforge {

// Fixed local evidence shared by every joint iteration.
struct ExtractionContext {
  const Corpus *corpus = nullptr;
  const std::vector<Segmentation> *segmentations = nullptr;
  const SegmentationParams *params = nullptr;
  const PhraseTable *table = nullptr;
  int epsilon = 6;
  int m_sp = 6;

  SegmentWeights weights() const { return SegmentWeights(*params, *table); }
};

// Up to m_sp other mentions of the tail's sentence, nearest first (same
// order as the nearest-subject heuristic).
std::vector<EntityMention> CandidateSubjects(const ExtractionContext &context,
                                             const EntityMention &tail);

// Best tuple for a given (head, tail) under sigma, or nullopt.
std::optional<RelationTuple> GenerateForPair(const ExtractionContext &context,
                                             const EntityMention &head,
                                             const EntityMention &tail,
                                             const CohesivenessFn &sigma);

// Initial tuples from nearest-subject pairs with sigma~ = 1.
std::vector<RelationTuple> InitialTuples(const ExtractionContext &context);

struct SubjectSwap {
  int tuple_index = 0;
  std::string old_head;
  std::string new_head;
  double old_sigma = 0;
  double new_sigma = 0;
};

struct PairUpdate {
  std::vector<RelationTuple> tuples;
  int delta_e = 0;
  std::vector<SubjectSwap> swaps;
};

// Re-attaches each tuple's tail to the candidate subject whose regenerated
// tuple has the highest sigma, replacing the incumbent only on strict
// improvement. Tails are untouched, so tail uniqueness is preserved.
PairUpdate UpdatePairs(const std::vector<RelationTuple> &tuples,
                       const EmbeddingTable &embeddings,
                       const ExtractionContext &context, int threads = 1);

struct JointIteration {
  int iteration = 0;
  int delta_e = 0;
  int num_pairs = 0;
  double ratio = 0;      // delta_e / num_pairs
  double mean_loss = 0;  // last epoch's mean hinge loss
  int epochs = 0;
};

struct JointResult {
  SegmentationModel segmentation;
  std::vector<RelationTuple> initial_tuples;
  std::vector<RelationTuple> tuples;
  EmbeddingTable embeddings;
  std::vector<JointIteration> history;
  std::vector<SubjectSwap> swaps;  // all accepted swaps, in order
};

// Entity vocabulary: every type-e phrase. Relation vocabulary: type-r
// segment phrases plus the predicate phrases of the given tuples. Sorted.
std::vector<std::string> EntityVocabulary(const std::vector<Segmentation> &segs);
std::vector<std::string> RelationVocabulary(const std::vector<Segmentation> &segs,
                                            const std::vector<RelationTuple> &tuples);

// Maps tuples to id triples; tuples with unknown phrases are skipped.
std::vector<Triple> ToTriples(const std::vector<RelationTuple> &tuples,
                              const EmbeddingTable &table);

// Joint loop over an already segmented corpus.
void RunJointIterations(const ExtractionContext &context, const RunConfig &config,
                        JointResult &result, int threads = 1);

// Segmentation EM, initial tuples, then alternating margin training and pair
// updates until the changed-pair ratio is <= conv_t or max_joint_iters
// iterations ran (at least one always runs).
JointResult RunJoint(const Corpus &corpus, const SeedLexicon &seeds,
                     const RunConfig &config, int threads = 1);

}  // namespace openforge

#endif  // OPENFORGE_JOINT_H_
