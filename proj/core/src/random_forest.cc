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

#include "openforge/random_forest.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace openforge {

void Dataset::AddRow(std::span<const double> features, int label) {
  values.insert(values.end(), features.begin(), features.end());
  labels.push_back(label);
}

namespace {

double Gini(const std::vector<double> &counts, double total) {
  if (total <= 0) return 0;
  double sum = 0;
  for (double c : counts) sum += (c / total) * (c / total);
  return 1.0 - sum;
}

}  // namespace

void DecisionTree::Fit(const Dataset &data, std::span<const int> sample,
                       const TreeOptions &options, std::mt19937_64 &rng) {
  num_classes_ = data.num_classes;
  nodes_.clear();
  distributions_.clear();
  std::vector<int> rows(sample.begin(), sample.end());
  Build(data, rows, 0, static_cast<int>(rows.size()), 0, options, rng);
}

int DecisionTree::MakeLeaf(const Dataset &data, const std::vector<int> &rows,
                           int begin, int end) {
  Node leaf;
  leaf.distribution = static_cast<int>(distributions_.size());
  distributions_.resize(distributions_.size() + num_classes_, 0.0);
  double *dist = distributions_.data() + leaf.distribution;
  for (int i = begin; i < end; ++i) dist[data.labels[rows[i]]] += 1.0;
  const double n = end - begin;
  for (int c = 0; c < num_classes_; ++c) {
    dist[c] = n > 0 ? dist[c] / n : 1.0 / num_classes_;
  }
  nodes_.push_back(leaf);
  return static_cast<int>(nodes_.size()) - 1;
}

int DecisionTree::Build(const Dataset &data, std::vector<int> &rows, int begin,
                        int end, int depth, const TreeOptions &options,
                        std::mt19937_64 &rng) {
  const int n = end - begin;
  std::vector<double> counts(num_classes_, 0.0);
  for (int i = begin; i < end; ++i) counts[data.labels[rows[i]]] += 1.0;
  const double parent_gini = Gini(counts, n);
  if (depth >= options.max_depth || n < options.min_samples_split ||
      parent_gini == 0.0) {
    return MakeLeaf(data, rows, begin, end);
  }

  const int F = data.num_features;
  int mtry = options.features_per_split > 0
                 ? options.features_per_split
                 : std::max(1, static_cast<int>(std::sqrt(static_cast<double>(F))));
  mtry = std::min(mtry, F);
  std::vector<int> features(F);
  std::iota(features.begin(), features.end(), 0);
  // Partial Fisher-Yates; the first mtry entries are the sampled features.
  for (int i = 0; i < mtry; ++i) {
    std::uniform_int_distribution<int> pick(i, F - 1);
    std::swap(features[i], features[pick(rng)]);
  }

  int best_feature = -1;
  double best_threshold = 0;
  double best_impurity = parent_gini - 1e-12;
  std::vector<std::pair<double, int>> column(n);
  for (int fi = 0; fi < mtry; ++fi) {
    const int f = features[fi];
    for (int i = 0; i < n; ++i) {
      int r = rows[begin + i];
      column[i] = {data.row(r)[f], data.labels[r]};
    }
    std::sort(column.begin(), column.end());
    std::vector<double> left(num_classes_, 0.0);
    std::vector<double> right = counts;
    for (int i = 0; i + 1 < n; ++i) {
      left[column[i].second] += 1;
      right[column[i].second] -= 1;
      if (column[i].first == column[i + 1].first) continue;
      const double nl = i + 1, nr = n - i - 1;
      double impurity = (nl * Gini(left, nl) + nr * Gini(right, nr)) / n;
      if (impurity < best_impurity) {
        best_impurity = impurity;
        best_feature = f;
        best_threshold = 0.5 * (column[i].first + column[i + 1].first);
      }
    }
  }
  if (best_feature < 0) return MakeLeaf(data, rows, begin, end);

  auto mid = std::partition(rows.begin() + begin, rows.begin() + end, [&](int r) {
    return data.row(r)[best_feature] <= best_threshold;
  });
  const int split = static_cast<int>(mid - rows.begin());

  const int self = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{best_feature, best_threshold, -1, -1, -1});
  int left_child = Build(data, rows, begin, split, depth + 1, options, rng);
  int right_child = Build(data, rows, split, end, depth + 1, options, rng);
  nodes_[self].left = left_child;
  nodes_[self].right = right_child;
  return self;
}

std::span<const double> DecisionTree::Predict(std::span<const double> x) const {
  int node = 0;
  while (nodes_[node].feature >= 0) {
    const Node &nd = nodes_[node];
    node = x[nd.feature] <= nd.threshold ? nd.left : nd.right;
  }
  return {distributions_.data() + nodes_[node].distribution,
          static_cast<size_t>(num_classes_)};
}

int DecisionTree::DepthFrom(int node) const {
  const Node &nd = nodes_[node];
  if (nd.feature < 0) return 0;
  return 1 + std::max(DepthFrom(nd.left), DepthFrom(nd.right));
}

int DecisionTree::depth() const { return nodes_.empty() ? 0 : DepthFrom(0); }

std::vector<double> RandomForest::Predict(std::span<const double> x) const {
  std::vector<double> out(num_classes_, 0.0);
  if (trees_.empty()) {
    std::fill(out.begin(), out.end(), 1.0 / num_classes_);
    return out;
  }
  for (const DecisionTree &tree : trees_) {
    auto dist = tree.Predict(x);
    for (int c = 0; c < num_classes_; ++c) out[c] += dist[c];
  }
  for (double &v : out) v /= trees_.size();
  return out;
}

}  // namespace openforge
