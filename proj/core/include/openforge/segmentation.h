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

#ifndef OPENFORGE_SEGMENTATION_H_
#define OPENFORGE_SEGMENTATION_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "openforge/candidates.h"
#include "openforge/config.h"
#include "openforge/corpus.h"
#include "openforge/ngram_stats.h"
#include "openforge/quality.h"
#include "openforge/seeds.h"

namespace openforge {

struct Segment {
  int begin = 0;  // half-open token span
  int end = 0;
  SegmentType type = SegmentType::kBackground;
  double quality = 0;   // Q of the assigned type
  double prob = 0;      // exp of the segment's log score
  std::string phrase;   // normalized key

  int length() const { return end - begin; }
};

struct Segmentation {
  std::string sentence_id;
  std::vector<Segment> segments;
  double log_prob = 0;  // sum of per-segment log scores
};

// Length prior base delta and the per-phrase multinomial theta.
struct SegmentationParams {
  double delta = 0.5;
  // Smoothed theta used for scoring.
  std::unordered_map<std::string, double> theta;
  // Raw ratios from the last re-estimation (observed phrases only).
  std::unordered_map<std::string, double> observed;
  // Floor for phrases of each length missing from theta.
  std::vector<double> floor;

  double Theta(const std::string &phrase, int length) const;
  double Floor(int length) const;
};

// theta_u proportional to corpus count within each length; delta = 0.5.
SegmentationParams InitialParams(const PhraseTable &table, double delta = 0.5);

// Re-estimates theta from segment counts: count(u) / segments of length |u|.
// Candidates never observed get 0.1 / (candidates of that length + 1) and the
// observed mass is scaled so each length still sums to one. delta becomes
// exp(-1 / mean segment length), clipped to [0.3, 0.99].
SegmentationParams UpdateTheta(std::span<const Segmentation> segmentations,
                               const PhraseTable &table);

// A scored choice for one span.
struct SpanChoice {
  SegmentType type = SegmentType::kBackground;
  double log_score = 0;
  double quality = 0;
};

// Returns the choice for tokens [begin, end) or nullopt if the span may not
// form a segment. Single-token spans must always be allowed.
using SpanScorer = std::function<std::optional<SpanChoice>(int begin, int end)>;

struct Tiling {
  std::vector<std::pair<int, int>> spans;
  std::vector<SpanChoice> choices;
  double log_prob = 0;
};

// Exact maximum-score tiling of [0, n) with spans of at most max_len tokens.
// Among equal scores prefers fewer segments, then a longer first segment.
Tiling DecodeBestTiling(int n, int max_len, const SpanScorer &scorer);

// Span scorer used by SegmentViterbi: a span of length L scores
// L*log(delta) + log(theta_u) + log(Q_t(u)) with t the argmax type.
// Multi-token spans must be known phrases of type e or r that do not cross
// punctuation.
std::optional<SpanChoice> ScoreSpan(const Sentence &sentence, int begin, int end,
                                    const SegmentationParams &params,
                                    const PhraseTable &table, int epsilon);

Segmentation SegmentViterbi(const Sentence &sentence,
                            const SegmentationParams &params,
                            const PhraseTable &table, int epsilon);

std::vector<Segmentation> SegmentCorpus(const Corpus &corpus,
                                        const SegmentationParams &params,
                                        const PhraseTable &table, int epsilon,
                                        int threads = 1);

// Log score of fixed segmentations under params (types are kept).
double CorpusLogLikelihood(std::span<const Segmentation> segmentations,
                           const SegmentationParams &params,
                           const PhraseTable &table);

struct SegmentationModel {
  CorpusStats stats;
  std::vector<PhraseCandidate> candidates;
  QualityModel quality;
  PhraseTable table;
  SegmentationParams params;
  std::vector<Segmentation> segmentations;  // parallel to corpus.sentences
  std::vector<double> log_likelihood;       // after each E-step
};

// Candidate generation, classifier training, then em_iters rounds of
// Viterbi decoding and re-estimation. A re-estimate that would lower the
// likelihood of the current segmentation is not adopted (per component), so
// the likelihood trace is non-decreasing.
SegmentationModel RunSegmentationEm(const Corpus &corpus,
                                    const SeedLexicon &seeds,
                                    const RunConfig &config, int threads = 1);

}  // namespace openforge

#endif  // OPENFORGE_SEGMENTATION_H_
