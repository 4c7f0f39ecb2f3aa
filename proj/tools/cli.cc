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

#include "cli.h"

#include <chrono>
#include <filesystem>
#include <map>
#include <ostream>
#include <utility>

#include "json.hpp"
#include "openforge/config.h"
#include "openforge/corpus.h"
#include "openforge/errors.h"
#include "openforge/io.h"
#include "openforge/joint.h"
#include "openforge/log.h"
#include "openforge/metrics.h"
#include "openforge/seeds.h"

namespace openforge::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Error tagged with the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(const std::string &stage, const std::string &message)
      : Error(stage + ": " + message) {}
};

template <typename Fn>
auto RunStage(const std::string &stage, const std::string &location, Fn &&fn)
    -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError &) {
    throw;
  } catch (const std::exception &e) {
    std::string where = location.empty() ? "" : location + ": ";
    throw StageError(stage, where + e.what());
  }
}

class StageTimer {
 public:
  void Record(const std::string &stage, Clock::time_point start) {
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    timings_[stage] = seconds;
  }
  const nlohmann::json &json() const { return timings_; }

 private:
  nlohmann::json timings_ = nlohmann::json::object();
};

struct PipelineOutput {
  RunConfig config;
  JointResult result;
  StageTimer timer;
};

PipelineOutput RunPipeline(const ExtractOptions &options) {
  PipelineOutput output;
  auto start = Clock::now();
  output.config = RunStage("config", options.config, [&] {
    RunConfig config = options.config.empty() ? RunConfig{} : LoadConfig(options.config);
    if (options.seed) config.rng_seed = *options.seed;
    config.Validate();
    return config;
  });
  if (options.threads < 1) throw StageError("config", "--threads must be >= 1");
  Corpus corpus = RunStage("ingest", options.corpus, [&] {
    if (!fs::exists(options.corpus)) throw Error("no such file");
    return LoadConllu(options.corpus);
  });
  SeedLexicon seeds = RunStage("ingest", options.seeds, [&] {
    if (!fs::exists(options.seeds)) throw Error("no such file");
    return LoadSeedLexicon(options.seeds);
  });
  output.timer.Record("ingest", start);

  JointResult &result = output.result;
  start = Clock::now();
  result.segmentation = RunStage("phrase_extraction", options.corpus, [&] {
    return RunSegmentationEm(corpus, seeds, output.config, options.threads);
  });
  output.timer.Record("phrase_extraction", start);

  ExtractionContext context;
  context.corpus = &corpus;
  context.segmentations = &result.segmentation.segmentations;
  context.params = &result.segmentation.params;
  context.table = &result.segmentation.table;
  context.epsilon = output.config.epsilon;
  context.m_sp = output.config.m_sp;

  start = Clock::now();
  result.initial_tuples =
      RunStage("tuple_generation", options.corpus, [&] { return InitialTuples(context); });
  output.timer.Record("tuple_generation", start);

  start = Clock::now();
  RunStage("joint_optimizer", "", [&] {
    RunJointIterations(context, output.config, result, options.threads);
  });
  output.timer.Record("joint_optimizer", start);
  return output;
}

std::string Absolute(const std::string &path) {
  return path.empty() ? path : fs::absolute(path).lexically_normal().string();
}

}  // namespace

int CmdExtract(const ExtractOptions &options, std::ostream &out, std::ostream &err) {
  try {
    PipelineOutput output = RunPipeline(options);
    const JointResult &result = output.result;

    RunStage("output", options.out, [&] {
      fs::create_directories(options.out);
      const fs::path dir(options.out);
      const std::vector<std::pair<std::string, std::string>> files = {
          {"tuples", TuplesToJsonl(result.tuples)},
          {"embeddings", EmbeddingsToTsv(result.embeddings)},
          {"report", IterationReportToTsv(result.history)},
          {"segmentations", SegmentationsToJsonl(result.segmentation.segmentations)},
      };
      const std::map<std::string, std::string> names = {
          {"tuples", "tuples.jsonl"},
          {"embeddings", "embeddings.tsv"},
          {"report", "report.tsv"},
          {"segmentations", "segmentations.jsonl"},
      };
      nlohmann::json outputs = nlohmann::json::object();
      for (const auto &[key, contents] : files) {
        const std::string path = (dir / names.at(key)).string();
        WriteFileAtomic(path, contents);
        outputs[key] = path;
      }

      nlohmann::json manifest;
      const RunConfig &c = output.config;
      manifest["config"] = {{"gamma", c.gamma},
                            {"epsilon", c.epsilon},
                            {"m_sp", c.m_sp},
                            {"alpha", c.alpha},
                            {"dim_k", c.dim_k},
                            {"conv_t", c.conv_t},
                            {"max_joint_iters", c.max_joint_iters},
                            {"neg_per_pos", c.neg_per_pos},
                            {"em_iters", c.em_iters},
                            {"rng_seed", c.rng_seed},
                            {"min_support", c.min_support},
                            {"max_epochs", c.max_epochs},
                            {"num_trees", c.num_trees},
                            {"tree_depth", c.tree_depth}};
      manifest["config_text"] = FormatConfig(output.config);
      manifest["inputs"] = {{"corpus", Absolute(options.corpus)},
                            {"seeds", Absolute(options.seeds)},
                            {"config", Absolute(options.config)}};
      manifest["rng_seed"] = output.config.rng_seed;
      manifest["threads"] = options.threads;
      manifest["timings_seconds"] = output.timer.json();
      manifest["outputs"] = outputs;
      manifest["num_tuples"] = result.tuples.size();
      manifest["joint_iterations"] = result.history.size();
      WriteFileAtomic((dir / "manifest.json").string(), manifest.dump(2) + "\n");
    });

    out << "extracted " << result.tuples.size() << " tuples in "
        << result.history.size() << " joint iterations -> " << options.out << "\n";
    return 0;
  } catch (const std::exception &e) {
    err << "openforge extract: " << e.what() << "\n";
    return 1;
  }
}

int CmdEval(const EvalOptions &options, std::ostream &out, std::ostream &err) {
  try {
    if (options.cutoff < 1) throw StageError("eval", "--cutoff must be >= 1");
    if (options.ks.empty()) throw StageError("eval", "at least one --k is required");
    std::vector<ScoredTuple> tuples = RunStage("eval", options.tuples, [&] {
      return ParseTuplesJsonl(ReadFile(options.tuples));
    });
    GoldLabels gold =
        RunStage("eval", options.gold, [&] { return ParseGold(ReadFile(options.gold)); });
    if (gold.empty()) throw StageError("eval", options.gold + ": gold file has no labels");

    std::vector<ScoredTuple> ranked =
        RankAndCut(std::move(tuples), static_cast<size_t>(options.cutoff));
    LabeledRanking labeled = LabelRanking(ranked, gold);
    if (!ranked.empty() && 2 * static_cast<size_t>(labeled.unlabeled) > ranked.size()) {
      LogWarning(std::to_string(labeled.unlabeled) + " of " +
                 std::to_string(ranked.size()) + " ranked tuples have no gold label");
      err << "warning: " << labeled.unlabeled << " of " << ranked.size()
          << " ranked tuples are unlabeled\n";
    }
    std::string tsv = RunStage("eval", "", [&] {
      return MetricsToTsv(EvaluateRanking(labeled.relevance, options.ks));
    });
    if (!options.out.empty()) {
      RunStage("output", options.out, [&] { WriteFileAtomic(options.out, tsv); });
    }
    out << tsv;
    return 0;
  } catch (const std::exception &e) {
    err << "openforge eval: " << e.what() << "\n";
    return 1;
  }
}

int CmdExportEmbeddings(const ExportOptions &options, std::ostream &out,
                        std::ostream &err) {
  try {
    PipelineOutput output = RunPipeline(options.extract);
    const EmbeddingTable &table = output.result.embeddings;
    RunStage("output", options.out, [&] {
      fs::path parent = fs::path(options.out).parent_path();
      if (!parent.empty()) fs::create_directories(parent);
      WriteFileAtomic(options.out, EmbeddingsToTsv(table));
    });
    out << "exported " << table.num_entities() << " entity and " << table.num_relations()
        << " relation vectors -> " << options.out << "\n";
    return 0;
  } catch (const std::exception &e) {
    err << "openforge export-embeddings: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace openforge::cli
