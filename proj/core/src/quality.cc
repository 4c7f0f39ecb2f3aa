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

#include "openforge/quality.h"

#include <random>

#include "openforge/errors.h"

namespace openforge {

char SegmentTypeCode(SegmentType t) {
  switch (t) {
    case SegmentType::kEntity:
      return 'e';
    case SegmentType::kRelation:
      return 'r';
    case SegmentType::kBackground:
      return 'b';
  }
  return '?';
}

SegmentType ArgmaxType(const TypeDistribution &q) {
  int best = 0;
  for (int t = 1; t < 3; ++t) {
    if (q[t] > q[best]) best = t;
  }
  return static_cast<SegmentType>(best);
}

TypeDistribution QualityModel::Predict(const FeatureVector &features) const {
  auto x = features.ToArray();
  std::vector<double> p = forest_.Predict(x);
  return {p[0], p[1], p[2]};
}

QualityModel TrainQualityClassifier(const std::vector<PhraseCandidate> &candidates,
                                    const std::vector<FeatureVector> &features,
                                    const SeedLexicon &seeds,
                                    const QualityOptions &options) {
  Dataset data;
  data.num_features = FeatureVector::kSize;
  data.num_classes = 3;
  std::vector<int> positives;
  std::vector<int> unlabeled;
  for (size_t i = 0; i < candidates.size(); ++i) {
    const std::string &phrase = candidates[i].phrase;
    int label = static_cast<int>(SegmentType::kBackground);
    if (seeds.entity_seeds.count(phrase)) {
      label = static_cast<int>(SegmentType::kEntity);
    } else if (seeds.relation_seeds.count(phrase)) {
      label = static_cast<int>(SegmentType::kRelation);
    }
    auto row = features[i].ToArray();
    data.AddRow(row, label);
    (label == static_cast<int>(SegmentType::kBackground) ? unlabeled : positives)
        .push_back(static_cast<int>(i));
  }
  if (positives.empty()) {
    throw TrainingError("no seed phrase matches any candidate");
  }
  if (unlabeled.empty()) {
    throw TrainingError("no unlabeled candidates to draw negatives from");
  }

  std::mt19937_64 rng(options.seed);
  TreeOptions tree_options;
  tree_options.max_depth = options.max_depth;
  RandomForest forest(3);
  const int num_pos = static_cast<int>(positives.size());
  const int num_unl = static_cast<int>(unlabeled.size());
  std::vector<int> pool = unlabeled;
  for (int t = 0; t < options.num_trees; ++t) {
    std::vector<int> sample;
    sample.reserve(2 * num_pos);
    std::uniform_int_distribution<int> pick_pos(0, num_pos - 1);
    for (int i = 0; i < num_pos; ++i) sample.push_back(positives[pick_pos(rng)]);
    if (num_unl >= num_pos) {
      for (int i = 0; i < num_pos; ++i) {
        std::uniform_int_distribution<int> pick(i, num_unl - 1);
        std::swap(pool[i], pool[pick(rng)]);
        sample.push_back(pool[i]);
      }
    } else {
      std::uniform_int_distribution<int> pick_unl(0, num_unl - 1);
      for (int i = 0; i < num_pos; ++i) sample.push_back(unlabeled[pick_unl(rng)]);
    }
    DecisionTree tree;
    tree.Fit(data, sample, tree_options, rng);
    forest.AddTree(std::move(tree));
  }
  return QualityModel(std::move(forest));
}

void PhraseTable::Add(const std::string &phrase, PhraseInfo info) {
  if (info.length >= static_cast<int>(per_length_.size())) {
    per_length_.resize(info.length + 1, 0);
  }
  auto [it, inserted] = entries_.insert_or_assign(phrase, info);
  if (inserted) ++per_length_[info.length];
}

const PhraseInfo *PhraseTable::Find(const std::string &phrase) const {
  auto it = entries_.find(phrase);
  return it == entries_.end() ? nullptr : &it->second;
}

int PhraseTable::CountOfLength(int length) const {
  if (length < 0 || length >= static_cast<int>(per_length_.size())) return 0;
  return per_length_[length];
}

PhraseTable BuildPhraseTable(const std::vector<PhraseCandidate> &candidates,
                             const std::vector<FeatureVector> &features,
                             const QualityModel &model,
                             const SeedLexicon &seeds) {
  PhraseTable table;
  for (size_t i = 0; i < candidates.size(); ++i) {
    PhraseInfo info;
    info.length = candidates[i].length;
    info.count = candidates[i].count;
    info.quality = model.Predict(features[i]);
    const std::string &phrase = candidates[i].phrase;
    int seeded = -1;
    if (seeds.entity_seeds.count(phrase)) {
      seeded = static_cast<int>(SegmentType::kEntity);
    } else if (seeds.relation_seeds.count(phrase)) {
      seeded = static_cast<int>(SegmentType::kRelation);
    }
    if (seeded >= 0) {
      for (int t = 0; t < 3; ++t) {
        info.quality[t] = 0.5 * info.quality[t] + (t == seeded ? 0.5 : 0.0);
      }
    }
    info.type = ArgmaxType(info.quality);
    table.Add(candidates[i].phrase, info);
  }
  return table;
}

}  // namespace openforge
