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

#ifndef OPENFORGE_METRICS_H_
#define OPENFORGE_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace openforge {

// A tuple as seen by evaluation: normalized strings plus its confidence.
struct ScoredTuple {
  std::string sent_id;
  std::string head;
  std::vector<std::string> predicate;
  std::string tail;
  double confidence = 0;
};

// "sent_id \t head \t r1|r2 \t tail" with the phrase fields lowercased.
std::string CanonicalKey(const std::string &sent_id, const std::string &head,
                         const std::string &predicate_joined,
                         const std::string &tail);
std::string CanonicalKey(const ScoredTuple &tuple);

class GoldLabels {
 public:
  // Returns false if the key was already present.
  bool Add(const std::string &key, bool correct);
  std::optional<bool> Find(const std::string &key) const;
  size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

 private:
  std::unordered_map<std::string, bool> labels_;
};

// Confidence descending, ties by (sent_id, head, tail, predicate); keeps
// at most cutoff tuples.
std::vector<ScoredTuple> RankAndCut(std::vector<ScoredTuple> tuples, size_t cutoff);

struct LabeledRanking {
  std::vector<int> relevance;  // 1 correct, 0 incorrect, in rank order
  int unlabeled = 0;           // tuples dropped for lack of a label
};

LabeledRanking LabelRanking(const std::vector<ScoredTuple> &ranked,
                            const GoldLabels &gold);

// All metrics take binary relevance in rank order and return values in
// [0, 1]; k <= 0 throws Error. P@k divides by min(k, list length).
double PrecisionAtK(std::span<const int> relevance, int k);
double AveragePrecision(std::span<const int> relevance);
double NdcgAtK(std::span<const int> relevance, int k);
// Mean of 1/rank over the correct positions.
double MeanReciprocalRank(std::span<const int> relevance);

struct MetricRow {
  std::string metric;
  int k = 0;  // 0 when the metric has no cut-off
  double value = 0;
};

// P@k and NDCG@k for each k, then MAP and MRR.
std::vector<MetricRow> EvaluateRanking(std::span<const int> relevance,
                                       std::span<const int> ks);

}  // namespace openforge

#endif  // OPENFORGE_METRICS_H_
