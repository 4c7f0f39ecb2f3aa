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

#include "openforge/joint.h"

#include <cmath>
#include <limits>
#include <set>

#include "openforge/dep_tree.h"
#include "openforge/errors.h"
#include "openforge/log.h"
#include "openforge/parallel.h"

namespace openforge {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double SigmaOrNegInf(const RelationTuple &tuple, const EmbeddingTable &table) {
  try {
    return ScoreSigma(tuple.head.phrase, tuple.predicate, tuple.tail.phrase, table);
  } catch (const LookupError &) {
    return kNegInf;
  }
}

std::vector<EntityMention> MentionsOf(const ExtractionContext &context, int index) {
  return EntityMentions(context.corpus->sentences[index], index,
                        (*context.segmentations)[index]);
}

}  // namespace

std::vector<EntityMention> CandidateSubjects(const ExtractionContext &context,
                                             const EntityMention &tail) {
  const Sentence &sentence = context.corpus->sentences[tail.sentence_index];
  DepTree tree(sentence);
  std::vector<EntityMention> mentions = MentionsOf(context, tail.sentence_index);
  return RankSubjects(tree, sentence, mentions, tail, context.m_sp);
}

std::optional<RelationTuple> GenerateForPair(const ExtractionContext &context,
                                             const EntityMention &head,
                                             const EntityMention &tail,
                                             const CohesivenessFn &sigma) {
  const Sentence &sentence = context.corpus->sentences[tail.sentence_index];
  DepTree tree(sentence);
  std::vector<TokenSpan> blocked;
  for (const EntityMention &m : MentionsOf(context, tail.sentence_index)) {
    blocked.push_back(m.span);
  }
  EntityPair pair{head, tail, tree.Distance(head.head_word, tail.head_word)};
  SemanticPath path = ExpandSemanticPath(tree, sentence, pair, blocked);
  return GenerateTuple(sentence, pair, path, context.weights(), sigma,
                       context.epsilon);
}

std::vector<RelationTuple> InitialTuples(const ExtractionContext &context) {
  const int n = static_cast<int>(context.corpus->sentences.size());
  std::vector<std::vector<RelationTuple>> per_sentence(n);
  CohesivenessFn identity = IdentityCohesiveness();
  for (int i = 0; i < n; ++i) {
    const Sentence &sentence = context.corpus->sentences[i];
    for (const EntityPair &pair :
         InitPositivePairs(sentence, i, (*context.segmentations)[i])) {
      if (auto tuple = GenerateForPair(context, pair.head, pair.tail, identity)) {
        per_sentence[i].push_back(std::move(*tuple));
      }
    }
  }
  std::vector<RelationTuple> tuples;
  for (auto &v : per_sentence) {
    for (auto &t : v) tuples.push_back(std::move(t));
  }
  return tuples;
}

PairUpdate UpdatePairs(const std::vector<RelationTuple> &tuples,
                       const EmbeddingTable &embeddings,
                       const ExtractionContext &context, int threads) {
  const int n = static_cast<int>(tuples.size());
  CohesivenessFn sigma = TableCohesiveness(embeddings);
  std::vector<RelationTuple> updated(n);
  std::vector<std::optional<SubjectSwap>> swaps(n);

  ParallelFor(n, threads, [&](int i) {
    const RelationTuple &incumbent = tuples[i];
    RelationTuple best = incumbent;
    double best_sigma = SigmaOrNegInf(incumbent, embeddings);
    if (auto regenerated =
            GenerateForPair(context, incumbent.head, incumbent.tail, sigma)) {
      double s = SigmaOrNegInf(*regenerated, embeddings);
      if (s != kNegInf) {
        best = std::move(*regenerated);
        best_sigma = s;
      }
    }
    const double incumbent_sigma = best_sigma;
    for (const EntityMention &candidate : CandidateSubjects(context, incumbent.tail)) {
      if (candidate == incumbent.head) continue;
      auto tuple = GenerateForPair(context, candidate, incumbent.tail, sigma);
      if (!tuple) continue;
      const double s = SigmaOrNegInf(*tuple, embeddings);
      if (s > best_sigma) {
        best = std::move(*tuple);
        best_sigma = s;
      }
    }
    if (!(best.head == incumbent.head)) {
      swaps[i] = SubjectSwap{i, incumbent.head.phrase, best.head.phrase,
                             incumbent_sigma, best_sigma};
    }
    updated[i] = std::move(best);
  });

  PairUpdate result;
  result.tuples = std::move(updated);
  for (auto &swap : swaps) {
    if (swap) {
      ++result.delta_e;
      result.swaps.push_back(std::move(*swap));
    }
  }
  return result;
}

std::vector<std::string> EntityVocabulary(const std::vector<Segmentation> &segs) {
  std::set<std::string> vocab;
  for (const Segmentation &seg : segs) {
    for (const Segment &s : seg.segments) {
      if (s.type == SegmentType::kEntity) vocab.insert(s.phrase);
    }
  }
  return {vocab.begin(), vocab.end()};
}

std::vector<std::string> RelationVocabulary(const std::vector<Segmentation> &segs,
                                            const std::vector<RelationTuple> &tuples) {
  std::set<std::string> vocab;
  for (const Segmentation &seg : segs) {
    for (const Segment &s : seg.segments) {
      if (s.type == SegmentType::kRelation) vocab.insert(s.phrase);
    }
  }
  for (const RelationTuple &t : tuples) vocab.insert(t.predicate.begin(), t.predicate.end());
  return {vocab.begin(), vocab.end()};
}

std::vector<Triple> ToTriples(const std::vector<RelationTuple> &tuples,
                              const EmbeddingTable &table) {
  std::vector<Triple> triples;
  triples.reserve(tuples.size());
  for (const RelationTuple &t : tuples) {
    Triple triple;
    triple.head = table.EntityId(t.head.phrase);
    triple.tail = table.EntityId(t.tail.phrase);
    bool ok = triple.head >= 0 && triple.tail >= 0 && !t.predicate.empty();
    for (const std::string &r : t.predicate) {
      int id = table.RelationId(r);
      ok = ok && id >= 0;
      triple.relations.push_back(id);
    }
    if (ok) triples.push_back(std::move(triple));
  }
  return triples;
}

void RunJointIterations(const ExtractionContext &context, const RunConfig &config,
                        JointResult &result, int threads) {
  result.tuples = result.initial_tuples;
  if (result.tuples.empty()) {
    LogWarning("no initial tuples; skipping joint optimization");
    return;
  }
  result.embeddings = InitEmbeddings(
      EntityVocabulary(*context.segmentations),
      RelationVocabulary(*context.segmentations, result.initial_tuples),
      config.dim_k, config.rng_seed);

  MarginTrainingOptions options;
  options.gamma = config.gamma;
  options.alpha = config.alpha;
  options.max_epochs = config.max_epochs;
  options.neg_per_pos = config.neg_per_pos;
  std::mt19937_64 rng(config.rng_seed + 1);

  int iteration = 0;
  double ratio = 1.0;
  do {
    ++iteration;
    std::vector<Triple> triples = ToTriples(result.tuples, result.embeddings);
    std::vector<double> trace;
    if (result.embeddings.num_entities() >= 2) {
      trace = TrainMargin(triples, result.embeddings, options, rng);
    }
    PairUpdate update = UpdatePairs(result.tuples, result.embeddings, context, threads);
    result.tuples = std::move(update.tuples);
    const int pairs = static_cast<int>(result.tuples.size());
    ratio = pairs == 0 ? 0.0 : static_cast<double>(update.delta_e) / pairs;
    JointIteration record;
    record.iteration = iteration;
    record.delta_e = update.delta_e;
    record.num_pairs = pairs;
    record.ratio = ratio;
    record.mean_loss = trace.empty() ? 0.0 : trace.back();
    record.epochs = static_cast<int>(trace.size());
    result.history.push_back(record);
    for (SubjectSwap &swap : update.swaps) result.swaps.push_back(std::move(swap));
    LogInfo("joint iteration " + std::to_string(iteration) + ": changed " +
            std::to_string(update.delta_e) + "/" + std::to_string(pairs) +
            ", loss " + std::to_string(record.mean_loss));
  } while (ratio > config.conv_t && iteration < config.max_joint_iters);
}

JointResult RunJoint(const Corpus &corpus, const SeedLexicon &seeds,
                     const RunConfig &config, int threads) {
  JointResult result;
  result.segmentation = RunSegmentationEm(corpus, seeds, config, threads);
  ExtractionContext context;
  context.corpus = &corpus;
  context.segmentations = &result.segmentation.segmentations;
  context.params = &result.segmentation.params;
  context.table = &result.segmentation.table;
  context.epsilon = config.epsilon;
  context.m_sp = config.m_sp;
  result.initial_tuples = InitialTuples(context);
  LogInfo("initial tuples: " + std::to_string(result.initial_tuples.size()));
  RunJointIterations(context, config, result, threads);
  return result;
}

}  // namespace openforge
