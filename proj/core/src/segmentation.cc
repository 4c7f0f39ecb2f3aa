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

#include "openforge/segmentation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "openforge/errors.h"
#include "openforge/log.h"
#include "openforge/parallel.h"

namespace openforge {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kMinDelta = 0.3;
constexpr double kMaxDelta = 0.99;

double FloorFor(int distinct) { return 0.1 / (distinct + 1); }

std::vector<double> Floors(const PhraseTable &table) {
  std::vector<double> floors(std::max(1, table.max_length() + 1), 0.1);
  for (int len = 1; len < static_cast<int>(floors.size()); ++len) {
    floors[len] = FloorFor(table.CountOfLength(len));
  }
  return floors;
}

double SegmentScore(int length, double theta, double quality, double delta) {
  return length * std::log(delta) + std::log(theta) + std::log(quality);
}

}  // namespace

double SegmentationParams::Floor(int length) const {
  if (length >= 0 && length < static_cast<int>(floor.size())) return floor[length];
  return 0.1;
}

double SegmentationParams::Theta(const std::string &phrase, int length) const {
  auto it = theta.find(phrase);
  return it != theta.end() ? it->second : Floor(length);
}

SegmentationParams InitialParams(const PhraseTable &table, double delta) {
  SegmentationParams params;
  params.delta = delta;
  params.floor = Floors(table);
  std::vector<double> totals(params.floor.size(), 0.0);
  for (const auto &[phrase, info] : table.entries()) totals[info.length] += info.count;
  for (const auto &[phrase, info] : table.entries()) {
    params.theta[phrase] = info.count / totals[info.length];
  }
  return params;
}

SegmentationParams UpdateTheta(std::span<const Segmentation> segmentations,
                               const PhraseTable &table) {
  SegmentationParams params;
  params.floor = Floors(table);

  std::map<std::string, std::pair<int, int>> counts;  // phrase -> (len, count)
  std::vector<long long> per_length(params.floor.size(), 0);
  long long total_segments = 0;
  long long total_tokens = 0;
  for (const Segmentation &seg : segmentations) {
    for (const Segment &s : seg.segments) {
      auto &entry = counts[s.phrase];
      entry.first = s.length();
      ++entry.second;
      if (s.length() >= static_cast<int>(per_length.size())) {
        per_length.resize(s.length() + 1, 0);
      }
      ++per_length[s.length()];
      ++total_segments;
      total_tokens += s.length();
    }
  }

  // Candidates of each length that were never observed keep the floor.
  std::vector<long long> observed_known(per_length.size(), 0);
  for (const auto &[phrase, entry] : counts) {
    params.observed[phrase] =
        static_cast<double>(entry.second) / per_length[entry.first];
    if (table.Find(phrase) != nullptr) ++observed_known[entry.first];
  }
  for (const auto &[phrase, observed] : params.observed) {
    const int len = counts[phrase].first;
    const long long unobserved =
        std::max(0LL, table.CountOfLength(len) - observed_known[len]);
    const double scale = 1.0 - params.Floor(len) * unobserved;
    params.theta[phrase] = observed * scale;
  }

  if (total_segments > 0) {
    const double mean_length = static_cast<double>(total_tokens) / total_segments;
    params.delta = std::clamp(std::exp(-1.0 / mean_length), kMinDelta, kMaxDelta);
  }
  return params;
}

Tiling DecodeBestTiling(int n, int max_len, const SpanScorer &scorer) {
  // best[i]: optimal score of the suffix starting at i.
  std::vector<double> best(n + 1, kNegInf);
  std::vector<int> segments(n + 1, 0);
  std::vector<int> choice_len(n + 1, 0);
  std::vector<SpanChoice> choice(n + 1);
  best[n] = 0;
  for (int i = n - 1; i >= 0; --i) {
    for (int len = 1; len <= max_len && i + len <= n; ++len) {
      if (best[i + len] == kNegInf) continue;
      std::optional<SpanChoice> c = scorer(i, i + len);
      if (!c || c->log_score == kNegInf) continue;
      const double score = c->log_score + best[i + len];
      const int segs = 1 + segments[i + len];
      bool better = score > best[i] ||
                    (score == best[i] && (segs < segments[i] ||
                                          (segs == segments[i] && len > choice_len[i])));
      if (better) {
        best[i] = score;
        segments[i] = segs;
        choice_len[i] = len;
        choice[i] = *c;
      }
    }
  }
  Tiling tiling;
  if (n > 0 && best[0] == kNegInf) {
    throw Error("no admissible tiling");
  }
  for (int i = 0; i < n; i += choice_len[i]) {
    tiling.spans.emplace_back(i, i + choice_len[i]);
    tiling.choices.push_back(choice[i]);
    tiling.log_prob += choice[i].log_score;
  }
  return tiling;
}

std::optional<SpanChoice> ScoreSpan(const Sentence &sentence, int begin, int end,
                                    const SegmentationParams &params,
                                    const PhraseTable &table, int epsilon) {
  const int length = end - begin;
  if (length > epsilon && length > 1) return std::nullopt;
  if (SpanCrossesPunctuation(sentence, begin, end)) return std::nullopt;
  const std::string key = PhraseKey(sentence, begin, end);
  const PhraseInfo *info = table.Find(key);
  SpanChoice choice;
  if (info == nullptr) {
    if (length > 1) return std::nullopt;
    // Unknown unigram: uninformative quality.
    choice.type = SegmentType::kBackground;
    choice.quality = 1.0 / 3.0;
  } else {
    choice.type = info->type;
    choice.quality = info->quality[static_cast<int>(info->type)];
    if (length > 1 && choice.type == SegmentType::kBackground) return std::nullopt;
  }
  if (choice.quality <= 0) return std::nullopt;
  choice.log_score =
      SegmentScore(length, params.Theta(key, length), choice.quality, params.delta);
  return choice;
}

Segmentation SegmentViterbi(const Sentence &sentence,
                            const SegmentationParams &params,
                            const PhraseTable &table, int epsilon) {
  // Unigrams stay admissible even when their quality is zero.
  SpanScorer scorer = [&](int b, int e) -> std::optional<SpanChoice> {
    auto c = ScoreSpan(sentence, b, e, params, table, epsilon);
    if (!c && e - b == 1) {
      SpanChoice fallback;
      fallback.type = SegmentType::kBackground;
      fallback.quality = std::numeric_limits<double>::min();
      fallback.log_score = SegmentScore(1, params.Theta(PhraseKey(sentence, b, e), 1),
                                        fallback.quality, params.delta);
      return fallback;
    }
    return c;
  };
  Tiling tiling = DecodeBestTiling(sentence.size(), std::max(1, epsilon), scorer);
  Segmentation seg;
  seg.sentence_id = sentence.id;
  seg.log_prob = 0;
  for (size_t i = 0; i < tiling.spans.size(); ++i) {
    Segment s;
    s.begin = tiling.spans[i].first;
    s.end = tiling.spans[i].second;
    s.type = tiling.choices[i].type;
    s.quality = tiling.choices[i].quality;
    s.prob = std::exp(tiling.choices[i].log_score);
    s.phrase = PhraseKey(sentence, s.begin, s.end);
    seg.log_prob += tiling.choices[i].log_score;
    seg.segments.push_back(std::move(s));
  }
  return seg;
}

std::vector<Segmentation> SegmentCorpus(const Corpus &corpus,
                                        const SegmentationParams &params,
                                        const PhraseTable &table, int epsilon,
                                        int threads) {
  std::vector<Segmentation> out(corpus.sentences.size());
  ParallelFor(static_cast<int>(out.size()), threads, [&](int i) {
    out[i] = SegmentViterbi(corpus.sentences[i], params, table, epsilon);
  });
  return out;
}

double CorpusLogLikelihood(std::span<const Segmentation> segmentations,
                           const SegmentationParams &params,
                           const PhraseTable &table) {
  (void)table;
  double total = 0;
  for (const Segmentation &seg : segmentations) {
    for (const Segment &s : seg.segments) {
      total += SegmentScore(s.length(), params.Theta(s.phrase, s.length()),
                            s.quality, params.delta);
    }
  }
  return total;
}

SegmentationModel RunSegmentationEm(const Corpus &corpus,
                                    const SeedLexicon &seeds,
                                    const RunConfig &config, int threads) {
  if (corpus.sentences.empty()) throw Error("cannot segment an empty corpus");
  SegmentationModel model;
  model.stats = CorpusStats::Build(corpus, config.epsilon);
  model.candidates = GenerateCandidates(corpus, model.stats, config);
  std::vector<FeatureVector> features(model.candidates.size());
  ParallelFor(static_cast<int>(features.size()), threads, [&](int i) {
    features[i] = ComputeFeatures(model.candidates[i], model.stats);
  });
  LogInfo("phrase candidates: " + std::to_string(model.candidates.size()));

  QualityOptions qopt;
  qopt.num_trees = config.num_trees;
  qopt.max_depth = config.tree_depth;
  qopt.seed = config.rng_seed;
  model.quality = TrainQualityClassifier(model.candidates, features, seeds, qopt);
  model.table = BuildPhraseTable(model.candidates, features, model.quality, seeds);

  model.params = InitialParams(model.table);
  model.segmentations =
      SegmentCorpus(corpus, model.params, model.table, config.epsilon, threads);
  model.log_likelihood.push_back(
      CorpusLogLikelihood(model.segmentations, model.params, model.table));

  for (int iter = 0; iter < config.em_iters; ++iter) {
    const SegmentationParams &old = model.params;
    SegmentationParams full = UpdateTheta(model.segmentations, model.table);
    const double base = CorpusLogLikelihood(model.segmentations, old, model.table);
    SegmentationParams theta_only = full;
    theta_only.delta = old.delta;
    SegmentationParams delta_only = old;
    delta_only.delta = full.delta;

    SegmentationParams next = old;
    for (SegmentationParams *candidate : {&full, &theta_only, &delta_only}) {
      if (CorpusLogLikelihood(model.segmentations, *candidate, model.table) >= base) {
        next = *candidate;
        break;
      }
    }
    model.params = std::move(next);
    model.segmentations =
        SegmentCorpus(corpus, model.params, model.table, config.epsilon, threads);
    model.log_likelihood.push_back(
        CorpusLogLikelihood(model.segmentations, model.params, model.table));
    LogDebug("em iteration " + std::to_string(iter + 1) + " log-likelihood " +
             std::to_string(model.log_likelihood.back()));
  }
  return model;
}

}  // namespace openforge
