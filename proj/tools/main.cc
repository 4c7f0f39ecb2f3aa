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

#include <iostream>

#include "CLI11.hpp"
#include "cli.h"

namespace {

void AddPipelineFlags(CLI::App *cmd, openforge::cli::ExtractOptions &opts) {
  cmd->add_option("--corpus", opts.corpus, "CoNLL-U corpus")->required();
  cmd->add_option("--seeds", opts.seeds, "seed lexicon (E|R<TAB>phrase)")->required();
  cmd->add_option("--config", opts.config, "key = value run configuration");
  cmd->add_option("--threads", opts.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "override rng_seed");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"openforge: open relation tuple extraction"};
  app.require_subcommand(1);

  openforge::cli::ExtractOptions extract;
  CLI::App *extract_cmd = app.add_subcommand("extract", "run the joint extraction pipeline");
  AddPipelineFlags(extract_cmd, extract);
  extract_cmd->add_option("--out", extract.out, "output directory")->required();

  openforge::cli::EvalOptions eval;
  CLI::App *eval_cmd = app.add_subcommand("eval", "score ranked tuples against gold labels");
  eval_cmd->add_option("--tuples", eval.tuples, "tuples JSONL from extract")->required();
  eval_cmd->add_option("--gold", eval.gold, "gold TSV")->required();
  eval_cmd->add_option("--cutoff", eval.cutoff, "keep the top-N tuples")
      ->capture_default_str();
  eval_cmd->add_option("--k", eval.ks, "rank cut-offs for P@k and NDCG@k")
      ->capture_default_str();
  eval_cmd->add_option("--out", eval.out, "also write the metrics TSV here");

  openforge::cli::ExportOptions exported;
  CLI::App *export_cmd = app.add_subcommand(
      "export-embeddings", "run the pipeline and write only the embeddings TSV");
  AddPipelineFlags(export_cmd, exported.extract);
  export_cmd->add_option("--out", exported.out, "embeddings TSV path")->required();

  CLI11_PARSE(app, argc, argv);

  if (*extract_cmd) return openforge::cli::CmdExtract(extract, std::cout, std::cerr);
  if (*eval_cmd) return openforge::cli::CmdEval(eval, std::cout, std::cerr);
  return openforge::cli::CmdExportEmbeddings(exported, std::cout, std::cerr);
}
