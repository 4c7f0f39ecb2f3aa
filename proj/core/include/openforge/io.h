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

#ifndef OPENFORGE_IO_H_
#define OPENFORGE_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "openforge/embedding.h"
#include "openforge/joint.h"
#include "openforge/metrics.h"
#include "openforge/segmentation.h"
#include "openforge/tuples.h"

namespace openforge {

// {"sent_id", "head", "predicate": [...], "tail", "confidence"} per line.
std::string TuplesToJsonl(const std::vector<RelationTuple> &tuples);
std::vector<ScoredTuple> ParseTuplesJsonl(std::string_view text);

ScoredTuple ToScored(const RelationTuple &tuple);

// {"sent_id", "segments": [{"start", "end", "type", "quality"}]} per line.
std::string SegmentationsToJsonl(const std::vector<Segmentation> &segmentations);

// "E|R \t phrase \t v1 ... vk" rows, entities first, in id order.
std::string EmbeddingsToTsv(const EmbeddingTable &table);
EmbeddingTable ParseEmbeddingsTsv(std::string_view text);

// Header plus "iteration, delta_e, ratio, mean_hinge_loss" rows.
std::string IterationReportToTsv(const std::vector<JointIteration> &history);

// Gold TSV rows: sent_id, head, predicate (phrases joined by '|'), tail,
// label in {1, 0}. A header row starting with "sent_id" is skipped.
GoldLabels ParseGold(std::string_view text);

// "metric \t k \t value" with a header row.
std::string MetricsToTsv(const std::vector<MetricRow> &rows);

std::string ReadFile(const std::string &path);
// Writes via a temporary file and rename.
void WriteFileAtomic(const std::string &path, std::string_view contents);

}  // namespace openforge

#endif  // OPENFORGE_IO_H_
