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

#include "openforge/io.h"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "openforge/errors.h"

namespace openforge {

namespace {

using nlohmann::json;

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

ScoredTuple ToScored(const RelationTuple &tuple) {
  return {tuple.sentence_id, tuple.head.phrase, tuple.predicate, tuple.tail.phrase,
          tuple.confidence};
}

std::string TuplesToJsonl(const std::vector<RelationTuple> &tuples) {
  std::string out;
  for (const RelationTuple &t : tuples) {
    json j;
    j["sent_id"] = t.sentence_id;
    j["head"] = t.head.phrase;
    j["predicate"] = t.predicate;
    j["tail"] = t.tail.phrase;
    j["confidence"] = t.confidence;
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<ScoredTuple> ParseTuplesJsonl(std::string_view text) {
  std::vector<ScoredTuple> tuples;
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    try {
      json j = json::parse(line);
      ScoredTuple t;
      t.sent_id = j.at("sent_id").get<std::string>();
      t.head = j.at("head").get<std::string>();
      t.predicate = j.at("predicate").get<std::vector<std::string>>();
      t.tail = j.at("tail").get<std::string>();
      t.confidence = j.at("confidence").get<double>();
      tuples.push_back(std::move(t));
    } catch (const json::exception &e) {
      throw ParseError(std::string("bad tuple record: ") + e.what(), line_no);
    }
  }
  return tuples;
}

std::string SegmentationsToJsonl(const std::vector<Segmentation> &segmentations) {
  std::string out;
  for (const Segmentation &seg : segmentations) {
    json j;
    j["sent_id"] = seg.sentence_id;
    json segments = json::array();
    for (const Segment &s : seg.segments) {
      segments.push_back({{"start", s.begin},
                          {"end", s.end},
                          {"type", std::string(1, SegmentTypeCode(s.type))},
                          {"quality", s.quality}});
    }
    j["segments"] = std::move(segments);
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

std::string EmbeddingsToTsv(const EmbeddingTable &table) {
  std::string out;
  auto row = [&](char type, const std::string &name, std::span<const double> v) {
    out.push_back(type);
    out.push_back('\t');
    out += name;
    for (double x : v) {
      out.push_back('\t');
      out += FormatDouble(x);
    }
    out.push_back('\n');
  };
  for (int i = 0; i < table.num_entities(); ++i) {
    row('E', table.entity_name(i), table.entity(i));
  }
  for (int i = 0; i < table.num_relations(); ++i) {
    row('R', table.relation_name(i), table.relation(i));
  }
  return out;
}

EmbeddingTable ParseEmbeddingsTsv(std::string_view text) {
  EmbeddingTable table;
  int dim = -1;
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    if (fields.size() < 3 || (fields[0] != "E" && fields[0] != "R")) {
      throw FormatError("expected 'E|R<TAB>phrase<TAB>values...'", line_no);
    }
    const int k = static_cast<int>(fields.size()) - 2;
    if (dim < 0) {
      dim = k;
      table = EmbeddingTable(dim);
    } else if (k != dim) {
      throw FormatError("inconsistent embedding dimension", line_no);
    }
    std::string name(fields[1]);
    auto v = fields[0] == "E" ? table.entity(table.AddEntity(name))
                              : table.relation(table.AddRelation(name));
    for (int i = 0; i < k; ++i) {
      std::string_view f = fields[i + 2];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v[i]);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw FormatError("bad number '" + std::string(f) + "'", line_no);
      }
    }
  }
  return table;
}

std::string IterationReportToTsv(const std::vector<JointIteration> &history) {
  std::string out = "iteration\tdelta_e\tratio\tmean_hinge_loss\n";
  for (const JointIteration &it : history) {
    out += std::to_string(it.iteration) + "\t" + std::to_string(it.delta_e) + "\t" +
           FormatDouble(it.ratio) + "\t" + FormatDouble(it.mean_loss) + "\n";
  }
  return out;
}

GoldLabels ParseGold(std::string_view text) {
  GoldLabels gold;
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    auto fields = SplitTabs(line);
    if (line_no == 1 && fields[0] == "sent_id") continue;
    if (fields.size() != 5) {
      throw FormatError("expected 5 tab-separated gold columns", line_no);
    }
    if (fields[4] != "1" && fields[4] != "0") {
      throw FormatError("label must be 1 or 0", line_no);
    }
    std::string key = CanonicalKey(std::string(fields[0]), std::string(fields[1]),
                                   std::string(fields[2]), std::string(fields[3]));
    if (!gold.Add(key, fields[4] == "1")) {
      throw FormatError("duplicate gold tuple", line_no);
    }
  }
  return gold;
}

std::string MetricsToTsv(const std::vector<MetricRow> &rows) {
  std::string out = "metric\tk\tvalue\n";
  for (const MetricRow &r : rows) {
    out += r.metric + "\t" + (r.k > 0 ? std::to_string(r.k) : "-") + "\t" +
           FormatDouble(r.value) + "\n";
  }
  return out;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFileAtomic(const std::string &path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace openforge
