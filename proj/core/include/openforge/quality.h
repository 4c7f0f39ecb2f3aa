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

#ifndef OPENFORGE_QUALITY_H_
#define OPENFORGE_QUALITY_H_

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "openforge/candidates.h"
#include "openforge/random_forest.h"
#include "openforge/seeds.h"

namespace openforge {

enum class SegmentType : int { kEntity = 0, kRelation = 1, kBackground = 2 };

char SegmentTypeCode(SegmentType t);  // 'e', 'r', 'b'

// Q_e, Q_r, Q_b indexed by SegmentType; sums to one.
using TypeDistribution = std::array<double, 3>;

// Argmax type; ties resolve in the order entity, relation, background.
SegmentType ArgmaxType(const TypeDistribution &q);

struct QualityOptions {
  int num_trees = 50;
  int max_depth = 8;
  std::uint64_t seed = 42;
};

// Phrase type classifier trained from seed-matched positives and unlabeled
// negatives. Each tree sees a bootstrap of the positives and a fresh draw of
// the same number of unlabeled candidates labeled as background.
class QualityModel {
 public:
  QualityModel() = default;
  explicit QualityModel(RandomForest forest) : forest_(std::move(forest)) {}

  TypeDistribution Predict(const FeatureVector &features) const;
  int num_trees() const { return forest_.num_trees(); }

 private:
  RandomForest forest_{3};
};

// features[i] belongs to candidates[i]. Throws TrainingError when no
// candidate matches a seed or the unlabeled pool is empty.
QualityModel TrainQualityClassifier(const std::vector<PhraseCandidate> &candidates,
                                    const std::vector<FeatureVector> &features,
                                    const SeedLexicon &seeds,
                                    const QualityOptions &options);

// Per-phrase lookup of candidate quality used by segmentation and tuple
// generation.
struct PhraseInfo {
  int length = 0;
  int count = 0;
  TypeDistribution quality{};
  SegmentType type = SegmentType::kBackground;
};

class PhraseTable {
 public:
  void Add(const std::string &phrase, PhraseInfo info);
  const PhraseInfo *Find(const std::string &phrase) const;
  // Number of distinct phrases of each length.
  int CountOfLength(int length) const;
  const std::unordered_map<std::string, PhraseInfo> &entries() const {
    return entries_;
  }
  int max_length() const { return static_cast<int>(per_length_.size()) - 1; }

 private:
  std::unordered_map<std::string, PhraseInfo> entries_;
  std::vector<int> per_length_;
};

// A seeded phrase has its prediction averaged with a point mass on the seed
// type, so the seed label always wins the argmax.
PhraseTable BuildPhraseTable(const std::vector<PhraseCandidate> &candidates,
                             const std::vector<FeatureVector> &features,
                             const QualityModel &model, const SeedLexicon &seeds);

}  // namespace openforge

#endif  // OPENFORGE_QUALITY_H_
