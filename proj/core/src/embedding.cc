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

#include "openforge/embedding.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "openforge/errors.h"

namespace openforge {

namespace {

constexpr int kMaxCorruptionAttempts = 100;

double Sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

// Fills diff with v_h + mean(v_r) - v_t.
void Residual(const EmbeddingTable &table, const Triple &triple,
              std::vector<double> &diff) {
  const int k = table.dim();
  diff.assign(k, 0.0);
  const double inv = 1.0 / static_cast<double>(triple.relations.size());
  for (int r : triple.relations) {
    auto v = table.relation(r);
    for (int i = 0; i < k; ++i) diff[i] += v[i] * inv;
  }
  auto h = table.entity(triple.head);
  auto t = table.entity(triple.tail);
  for (int i = 0; i < k; ++i) diff[i] += h[i] - t[i];
}

void AddDistanceGradient(const EmbeddingTable &table, const Triple &triple,
                         double scale, std::vector<GradientTerm> &terms) {
  std::vector<double> diff;
  Residual(table, triple, diff);
  std::vector<double> sign(diff.size());
  for (size_t i = 0; i < diff.size(); ++i) sign[i] = Sign(diff[i]) * scale;
  terms.push_back({true, triple.head, sign});
  std::vector<double> neg(sign.size());
  for (size_t i = 0; i < sign.size(); ++i) neg[i] = -sign[i];
  terms.push_back({true, triple.tail, neg});
  const double inv = 1.0 / static_cast<double>(triple.relations.size());
  std::vector<double> rel(sign.size());
  for (size_t i = 0; i < sign.size(); ++i) rel[i] = sign[i] * inv;
  for (int r : triple.relations) terms.push_back({false, r, rel});
}

void ApplyTerms(EmbeddingTable &table, const std::vector<GradientTerm> &terms,
                double alpha) {
  for (const GradientTerm &term : terms) {
    auto v = term.is_entity ? table.entity(term.id) : table.relation(term.id);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= alpha * term.grad[i];
  }
}

// Moves the vectors of x against sign, the L1 subgradient of its residual.
void StepAgainst(EmbeddingTable &table, const Triple &x, const std::vector<double> &sign,
                 double alpha) {
  const int k = table.dim();
  auto h = table.entity(x.head);
  for (int i = 0; i < k; ++i) h[i] -= alpha * sign[i];
  auto t = table.entity(x.tail);
  for (int i = 0; i < k; ++i) t[i] -= alpha * -sign[i];
  const double inv = 1.0 / static_cast<double>(x.relations.size());
  for (int r : x.relations) {
    auto v = table.relation(r);
    for (int i = 0; i < k; ++i) v[i] -= alpha * (sign[i] * inv);
  }
}

// HingeLoss followed by ApplyTerms(HingeSubgradient(...)), sharing one pass
// over the residuals and no per-sample allocation.
double HingeStep(EmbeddingTable &table, const Triple &pos, const Triple &neg,
                 double gamma, double alpha, std::vector<double> &rp,
                 std::vector<double> &rn) {
  Residual(table, pos, rp);
  Residual(table, neg, rn);
  double dp = 0;
  double dn = 0;
  for (double x : rp) dp += std::abs(x);
  for (double x : rn) dn += std::abs(x);
  const double loss = std::max(0.0, gamma + dp - dn);
  if (loss <= 0) return 0.0;
  for (double &x : rp) x = Sign(x);
  for (double &x : rn) x = Sign(x) * -1.0;
  StepAgainst(table, pos, rp, alpha);
  StepAgainst(table, neg, rn, alpha);
  return loss;
}

}  // namespace

int EmbeddingTable::AddEntity(const std::string &phrase) {
  auto [it, inserted] = entity_ids_.emplace(phrase, num_entities());
  if (inserted) {
    entity_names_.push_back(phrase);
    entity_data_.resize(entity_data_.size() + dim_, 0.0);
  }
  return it->second;
}

int EmbeddingTable::AddRelation(const std::string &phrase) {
  auto [it, inserted] = relation_ids_.emplace(phrase, num_relations());
  if (inserted) {
    relation_names_.push_back(phrase);
    relation_data_.resize(relation_data_.size() + dim_, 0.0);
  }
  return it->second;
}

int EmbeddingTable::EntityId(const std::string &phrase) const {
  auto it = entity_ids_.find(phrase);
  return it == entity_ids_.end() ? -1 : it->second;
}

int EmbeddingTable::RelationId(const std::string &phrase) const {
  auto it = relation_ids_.find(phrase);
  return it == relation_ids_.end() ? -1 : it->second;
}

void EmbeddingTable::NormalizeEntities() {
  for (int id = 0; id < num_entities(); ++id) {
    auto v = entity(id);
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0) {
      for (double &x : v) x /= norm;
    }
  }
}

EmbeddingTable InitEmbeddings(const std::vector<std::string> &entity_vocab,
                              const std::vector<std::string> &relation_vocab,
                              int dim, std::uint64_t seed) {
  if (entity_vocab.empty()) throw Error("empty entity vocabulary");
  if (relation_vocab.empty()) throw Error("empty relation vocabulary");
  if (dim <= 0) throw Error("embedding dimension must be positive");
  EmbeddingTable table(dim);
  std::mt19937_64 rng(seed);
  const double bound = 6.0 / std::sqrt(static_cast<double>(dim));
  std::uniform_real_distribution<double> uniform(-bound, bound);
  for (const std::string &phrase : entity_vocab) {
    int id = table.AddEntity(phrase);
    for (double &x : table.entity(id)) x = uniform(rng);
  }
  for (const std::string &phrase : relation_vocab) {
    int id = table.AddRelation(phrase);
    for (double &x : table.relation(id)) x = uniform(rng);
  }
  table.NormalizeEntities();
  return table;
}

std::vector<double> PredicateEmbedding(const std::vector<std::string> &predicate,
                                       const EmbeddingTable &table) {
  if (predicate.empty()) throw LookupError("empty predicate");
  std::vector<double> mean(table.dim(), 0.0);
  for (const std::string &phrase : predicate) {
    int id = table.RelationId(phrase);
    if (id < 0) throw LookupError("unknown relation phrase '" + phrase + "'");
    auto v = table.relation(id);
    for (int i = 0; i < table.dim(); ++i) mean[i] += v[i];
  }
  for (double &x : mean) x /= static_cast<double>(predicate.size());
  return mean;
}

double ScoreSigma(const std::string &head, const std::vector<std::string> &predicate,
                  const std::string &tail, const EmbeddingTable &table) {
  int h = table.EntityId(head);
  if (h < 0) throw LookupError("unknown entity phrase '" + head + "'");
  int t = table.EntityId(tail);
  if (t < 0) throw LookupError("unknown entity phrase '" + tail + "'");
  std::vector<double> p = PredicateEmbedding(predicate, table);
  auto vh = table.entity(h);
  auto vt = table.entity(t);
  double d = 0;
  for (int i = 0; i < table.dim(); ++i) d += std::abs(vh[i] + p[i] - vt[i]);
  return -d;
}

CohesivenessFn TableCohesiveness(const EmbeddingTable &table) {
  return [&table](const std::string &relation, const std::string &head,
                  const std::string &tail) {
    const int h = table.EntityId(head);
    const int t = table.EntityId(tail);
    const int r = table.RelationId(relation);
    if (h < 0 || t < 0 || r < 0) return -std::numeric_limits<double>::infinity();
    auto vh = table.entity(h);
    auto vt = table.entity(t);
    auto vr = table.relation(r);
    double d = 0;
    for (int i = 0; i < table.dim(); ++i) d += std::abs(vh[i] + vr[i] - vt[i]);
    return -d / table.dim();
  };
}

Triple NegativeSample::Apply(const Triple &positive) const {
  Triple out = positive;
  (corrupt_head ? out.head : out.tail) = replacement;
  return out;
}

double TripleDistance(const EmbeddingTable &table, const Triple &triple) {
  std::vector<double> diff;
  Residual(table, triple, diff);
  double d = 0;
  for (double x : diff) d += std::abs(x);
  return d;
}

double HingeLoss(const EmbeddingTable &table, const Triple &positive,
                 const Triple &negative, double gamma) {
  return std::max(0.0, gamma + TripleDistance(table, positive) -
                           TripleDistance(table, negative));
}

std::vector<GradientTerm> HingeSubgradient(const EmbeddingTable &table,
                                           const Triple &positive,
                                           const Triple &negative, double gamma) {
  std::vector<GradientTerm> terms;
  if (HingeLoss(table, positive, negative, gamma) <= 0) return terms;
  AddDistanceGradient(table, positive, 1.0, terms);
  AddDistanceGradient(table, negative, -1.0, terms);
  return terms;
}

std::vector<NegativeSample> SampleNegatives(std::span<const Triple> positives,
                                            int num_entities, int neg_per_pos,
                                            std::mt19937_64 &rng) {
  if (num_entities < 2) {
    throw Error("negative sampling needs at least two entities");
  }
  std::set<Triple> known(positives.begin(), positives.end());
  std::uniform_int_distribution<int> pick_entity(0, num_entities - 1);
  std::bernoulli_distribution pick_head(0.5);
  std::vector<NegativeSample> out;
  out.reserve(positives.size() * neg_per_pos);
  for (int i = 0; i < static_cast<int>(positives.size()); ++i) {
    for (int n = 0; n < neg_per_pos; ++n) {
      for (int attempt = 0; attempt < kMaxCorruptionAttempts; ++attempt) {
        NegativeSample sample{i, pick_head(rng), pick_entity(rng)};
        if (!known.count(sample.Apply(positives[i]))) {
          out.push_back(sample);
          break;
        }
      }
    }
  }
  return out;
}

std::vector<double> TrainMargin(std::span<const Triple> positives,
                                EmbeddingTable &table,
                                const MarginTrainingOptions &options,
                                std::mt19937_64 &rng) {
  std::vector<double> trace;
  if (positives.empty()) return trace;
  for (int epoch = 0; epoch < options.max_epochs; ++epoch) {
    std::vector<NegativeSample> negatives =
        options.fixed_negatives.empty()
            ? SampleNegatives(positives, table.num_entities(), options.neg_per_pos, rng)
            : options.fixed_negatives;
    double total = 0;
    std::vector<GradientTerm> batch;
    std::vector<double> rp;
    std::vector<double> rn;
    for (const NegativeSample &ns : negatives) {
      const Triple &pos = positives[ns.source];
      const Triple neg = ns.Apply(pos);
      if (!options.full_batch) {
        total += HingeStep(table, pos, neg, options.gamma, options.alpha, rp, rn);
        continue;
      }
      total += HingeLoss(table, pos, neg, options.gamma);
      std::vector<GradientTerm> terms = HingeSubgradient(table, pos, neg, options.gamma);
      batch.insert(batch.end(), std::make_move_iterator(terms.begin()),
                   std::make_move_iterator(terms.end()));
    }
    if (options.full_batch) ApplyTerms(table, batch, options.alpha);
    if (options.normalize_entities) table.NormalizeEntities();

    const double mean = negatives.empty() ? 0.0 : total / negatives.size();
    trace.push_back(mean);
    if (mean == 0.0) break;
    if (trace.size() >= 2 &&
        std::abs(trace[trace.size() - 2] - mean) < options.min_improvement) {
      break;
    }
  }
  return trace;
}

}  // namespace openforge
