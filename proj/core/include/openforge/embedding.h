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

#ifndef OPENFORGE_EMBEDDING_H_
#define OPENFORGE_EMBEDDING_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "openforge/tuples.h"

namespace openforge {

// Entity and relation phrase vectors of a shared dimension, addressed by
// dense ids in insertion order.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(int dim = 0) : dim_(dim) {}

  int dim() const { return dim_; }
  int num_entities() const { return static_cast<int>(entity_names_.size()); }
  int num_relations() const { return static_cast<int>(relation_names_.size()); }

  // Returns the existing id or appends a zero vector.
  int AddEntity(const std::string &phrase);
  int AddRelation(const std::string &phrase);

  // -1 when absent.
  int EntityId(const std::string &phrase) const;
  int RelationId(const std::string &phrase) const;

  const std::string &entity_name(int id) const { return entity_names_[id]; }
  const std::string &relation_name(int id) const { return relation_names_[id]; }

  std::span<double> entity(int id) {
    return {entity_data_.data() + static_cast<size_t>(id) * dim_,
            static_cast<size_t>(dim_)};
  }
  std::span<const double> entity(int id) const {
    return {entity_data_.data() + static_cast<size_t>(id) * dim_,
            static_cast<size_t>(dim_)};
  }
  std::span<double> relation(int id) {
    return {relation_data_.data() + static_cast<size_t>(id) * dim_,
            static_cast<size_t>(dim_)};
  }
  std::span<const double> relation(int id) const {
    return {relation_data_.data() + static_cast<size_t>(id) * dim_,
            static_cast<size_t>(dim_)};
  }

  // Scales every entity vector to unit L2 norm (zero vectors are left alone).
  void NormalizeEntities();

  bool operator==(const EmbeddingTable &) const = default;

 private:
  int dim_;
  std::vector<std::string> entity_names_;
  std::vector<std::string> relation_names_;
  std::unordered_map<std::string, int> entity_ids_;
  std::unordered_map<std::string, int> relation_ids_;
  std::vector<double> entity_data_;
  std::vector<double> relation_data_;
};

// Entries uniform on [-6/sqrt(k), 6/sqrt(k)]; entities then L2-normalized.
// Throws Error for an empty vocabulary or a non-positive dimension.
EmbeddingTable InitEmbeddings(const std::vector<std::string> &entity_vocab,
                              const std::vector<std::string> &relation_vocab,
                              int dim, std::uint64_t seed);

// Mean of the relation phrase vectors. Throws LookupError on unknown phrases.
std::vector<double> PredicateEmbedding(const std::vector<std::string> &predicate,
                                       const EmbeddingTable &table);

// -||v_h + v_p - v_t||_1. Throws LookupError on unknown phrases.
double ScoreSigma(const std::string &head, const std::vector<std::string> &predicate,
                  const std::string &tail, const EmbeddingTable &table);

// log sigma~ for tuple generation: sigma of the single relation phrase
// divided by the dimension, or -inf when any phrase is unknown. The scaling
// keeps the score on the same footing as log w for any k.
CohesivenessFn TableCohesiveness(const EmbeddingTable &table);

// A tuple in id space.
struct Triple {
  int head = 0;
  std::vector<int> relations;
  int tail = 0;

  bool operator==(const Triple &) const = default;
  auto operator<=>(const Triple &) const = default;
};

struct NegativeSample {
  int source = 0;          // index into the positive triples
  bool corrupt_head = false;
  int replacement = 0;     // entity id placed in the corrupted slot

  Triple Apply(const Triple &positive) const;
};

// L1 distance ||h + mean(r) - t||_1.
double TripleDistance(const EmbeddingTable &table, const Triple &triple);

// max(0, gamma + d(pos) - d(neg)).
double HingeLoss(const EmbeddingTable &table, const Triple &positive,
                 const Triple &negative, double gamma);

// One gradient contribution to an entity or relation vector.
struct GradientTerm {
  bool is_entity = true;
  int id = 0;
  std::vector<double> grad;
};

// Subgradient of HingeLoss with sign(0) = 0. Empty when the hinge is
// inactive. Terms may repeat an id; they are meant to be summed.
std::vector<GradientTerm> HingeSubgradient(const EmbeddingTable &table,
                                           const Triple &positive,
                                           const Triple &negative, double gamma);

// Per positive, neg_per_pos corruptions of a uniformly chosen slot with a
// uniform entity, redrawn until the result is not a positive triple (at
// most 100 tries, then dropped). Throws Error when fewer than two entities.
std::vector<NegativeSample> SampleNegatives(std::span<const Triple> positives,
                                            int num_entities, int neg_per_pos,
                                            std::mt19937_64 &rng);

struct MarginTrainingOptions {
  double gamma = 1.0;
  double alpha = 1e-3;
  int max_epochs = 200;
  int neg_per_pos = 2;
  double min_improvement = 1e-6;  // stop when |loss change| falls below
  bool full_batch = false;        // sum all subgradients before one update
  bool normalize_entities = true;
  // Reused every epoch when non-empty; otherwise resampled per epoch.
  std::vector<NegativeSample> fixed_negatives;
};

// Stochastic (or full-batch) subgradient descent on the hinge loss. Returns
// the mean loss of each epoch, evaluated as the epoch runs.
std::vector<double> TrainMargin(std::span<const Triple> positives,
                                EmbeddingTable &table,
                                const MarginTrainingOptions &options,
                                std::mt19937_64 &rng);

}  // namespace openforge

#endif  // OPENFORGE_EMBEDDING_H_
