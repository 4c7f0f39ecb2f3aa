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

#include "openforge/metrics.h"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "openforge/corpus.h"
#include "openforge/errors.h"

namespace openforge {

namespace {

void RequirePositiveK(int k) {
  if (k <= 0) throw Error("rank cut-off k must be positive");
}

std::string JoinPredicate(const std::vector<std::string> &predicate) {
  std::string out;
  for (size_t i = 0; i < predicate.size(); ++i) {
    if (i > 0) out.push_back('|');
    out += predicate[i];
  }
  return out;
}

double Dcg(std::span<const int> relevance, int k) {
  double dcg = 0;
  const int n = std::min<int>(k, relevance.size());
  for (int i = 0; i < n; ++i) {
    if (relevance[i]) dcg += 1.0 / std::log2(i + 2.0);
  }
  return dcg;
}

}  // namespace

std::string CanonicalKey(const std::string &sent_id, const std::string &head,
                         const std::string &predicate_joined,
                         const std::string &tail) {
  return sent_id + "\t" + Lowercase(head) + "\t" + Lowercase(predicate_joined) +
         "\t" + Lowercase(tail);
}

std::string CanonicalKey(const ScoredTuple &t) {
  return CanonicalKey(t.sent_id, t.head, JoinPredicate(t.predicate), t.tail);
}

bool GoldLabels::Add(const std::string &key, bool correct) {
  return labels_.emplace(key, correct).second;
}

std::optional<bool> GoldLabels::Find(const std::string &key) const {
  auto it = labels_.find(key);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::vector<ScoredTuple> RankAndCut(std::vector<ScoredTuple> tuples, size_t cutoff) {
  std::sort(tuples.begin(), tuples.end(),
            [](const ScoredTuple &a, const ScoredTuple &b) {
              if (a.confidence != b.confidence) return a.confidence > b.confidence;
              return std::tie(a.sent_id, a.head, a.tail, a.predicate) <
                     std::tie(b.sent_id, b.head, b.tail, b.predicate);
            });
  if (tuples.size() > cutoff) tuples.resize(cutoff);
  return tuples;
}

LabeledRanking LabelRanking(const std::vector<ScoredTuple> &ranked,
                            const GoldLabels &gold) {
  LabeledRanking out;
  for (const ScoredTuple &t : ranked) {
    std::optional<bool> label = gold.Find(CanonicalKey(t));
    if (!label) {
      ++out.unlabeled;
      continue;
    }
    out.relevance.push_back(*label ? 1 : 0);
  }
  return out;
}

double PrecisionAtK(std::span<const int> relevance, int k) {
  RequirePositiveK(k);
  const int n = std::min<int>(k, relevance.size());
  if (n == 0) return 0.0;
  int correct = 0;
  for (int i = 0; i < n; ++i) correct += relevance[i] ? 1 : 0;
  return static_cast<double>(correct) / n;
}

double AveragePrecision(std::span<const int> relevance) {
  int correct = 0;
  double sum = 0;
  for (size_t i = 0; i < relevance.size(); ++i) {
    if (relevance[i]) {
      ++correct;
      sum += static_cast<double>(correct) / (i + 1);
    }
  }
  return correct == 0 ? 0.0 : sum / correct;
}

double NdcgAtK(std::span<const int> relevance, int k) {
  RequirePositiveK(k);
  std::vector<int> ideal(relevance.begin(), relevance.end());
  std::sort(ideal.begin(), ideal.end(), std::greater<int>());
  const double idcg = Dcg(ideal, k);
  return idcg == 0 ? 0.0 : Dcg(relevance, k) / idcg;
}

double MeanReciprocalRank(std::span<const int> relevance) {
  int correct = 0;
  double sum = 0;
  for (size_t i = 0; i < relevance.size(); ++i) {
    if (relevance[i]) {
      ++correct;
      sum += 1.0 / (i + 1);
    }
  }
  return correct == 0 ? 0.0 : sum / correct;
}

std::vector<MetricRow> EvaluateRanking(std::span<const int> relevance,
                                       std::span<const int> ks) {
  std::vector<MetricRow> rows;
  for (int k : ks) rows.push_back({"P", k, PrecisionAtK(relevance, k)});
  for (int k : ks) rows.push_back({"NDCG", k, NdcgAtK(relevance, k)});
  rows.push_back({"MAP", 0, AveragePrecision(relevance)});
  rows.push_back({"MRR", 0, MeanReciprocalRank(relevance)});
  return rows;
}

}  // namespace openforge
