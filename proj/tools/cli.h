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

#ifndef OPENFORGE_TOOLS_CLI_H_
#define OPENFORGE_TOOLS_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace openforge::cli {

struct ExtractOptions {
  std::string corpus;
  std::string seeds;
  std::string config;  // empty: defaults
  std::string out;     // output directory, created if missing
  int threads = 1;
  std::optional<unsigned long long> seed;  // overrides rng_seed
};

struct EvalOptions {
  std::string tuples;
  std::string gold;
  int cutoff = 300;
  std::vector<int> ks = {100, 200};
  std::string out;  // metrics TSV path; empty prints only
};

struct ExportOptions {
  ExtractOptions extract;
  std::string out;  // embeddings TSV path
};

// Each returns a process exit status and reports failures on `err`.
int CmdExtract(const ExtractOptions &options, std::ostream &out, std::ostream &err);
int CmdEval(const EvalOptions &options, std::ostream &out, std::ostream &err);
int CmdExportEmbeddings(const ExportOptions &options, std::ostream &out,
                        std::ostream &err);

}  // namespace openforge::cli

#endif  // OPENFORGE_TOOLS_CLI_H_
