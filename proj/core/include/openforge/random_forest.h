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

#ifndef OPENFORGE_RANDOM_FOREST_H_
#define OPENFORGE_RANDOM_FOREST_H_

#include <random>
#include <span>
#include <vector>

namespace openforge {

// Dense row-major design matrix with integer class labels.
struct Dataset {
  int num_features = 0;
  int num_classes = 0;
  std::vector<double> values;  // rows * num_features
  std::vector<int> labels;

  int rows() const { return static_cast<int>(labels.size()); }
  std::span<const double> row(int r) const {
    return {values.data() + static_cast<size_t>(r) * num_features,
            static_cast<size_t>(num_features)};
  }
  void AddRow(std::span<const double> features, int label);
};

struct TreeOptions {
  int max_depth = 8;
  int min_samples_split = 2;
  int features_per_split = 0;  // 0 selects floor(sqrt(num_features))
};

// CART classification tree with Gini impurity. Leaves store the class
// distribution of their training rows, so predictions sum to one.
class DecisionTree {
 public:
  // Fits on data rows listed in sample (duplicates allowed, as in bootstraps).
  void Fit(const Dataset &data, std::span<const int> sample,
           const TreeOptions &options, std::mt19937_64 &rng);

  std::span<const double> Predict(std::span<const double> features) const;

  int depth() const;
  int num_nodes() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    int feature = -1;  // -1 for leaves
    double threshold = 0;
    int left = -1;
    int right = -1;
    int distribution = -1;  // offset into distributions_ for leaves
  };

  int Build(const Dataset &data, std::vector<int> &rows, int begin, int end,
            int depth, const TreeOptions &options, std::mt19937_64 &rng);
  int MakeLeaf(const Dataset &data, const std::vector<int> &rows, int begin,
               int end);
  int DepthFrom(int node) const;

  int num_classes_ = 0;
  std::vector<Node> nodes_;
  std::vector<double> distributions_;
};

// Averages the leaf distributions of its trees.
class RandomForest {
 public:
  explicit RandomForest(int num_classes = 0) : num_classes_(num_classes) {}

  void AddTree(DecisionTree tree) { trees_.push_back(std::move(tree)); }
  std::vector<double> Predict(std::span<const double> features) const;

  int num_trees() const { return static_cast<int>(trees_.size()); }
  int num_classes() const { return num_classes_; }

 private:
  int num_classes_;
  std::vector<DecisionTree> trees_;
};

}  // namespace openforge

#endif  // OPENFORGE_RANDOM_FOREST_H_
