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

#ifndef OPENFORGE_CONFIG_H_
#define OPENFORGE_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace openforge {

// Run parameters. The defaults are the published settings for the margin,
// phrase length, subject neighborhood, learning rate, embedding dimension
// and convergence ratio; the rest are local choices.
struct RunConfig {
  double gamma = 1.0;           // hinge margin
  int epsilon = 6;              // max phrase length in tokens
  int m_sp = 6;                 // candidate subjects per tail
  double alpha = 1e-3;          // embedding learning rate
  int dim_k = 100;              // embedding dimension
  double conv_t = 1e-3;         // stop when changed/total pairs <= conv_t
  int max_joint_iters = 20;
  int neg_per_pos = 2;
  int em_iters = 5;             // hard-EM rounds; 0 keeps initial params
  std::uint64_t rng_seed = 42;
  int min_support = 2;          // min count for multi-token n-gram candidates
  int max_epochs = 200;         // embedding epochs per joint iteration
  int num_trees = 50;
  int tree_depth = 8;

  // Throws ConfigError naming the first offending key.
  void Validate() const;
};

// Parses "key = value" lines; '#' starts a comment. Unknown keys,
// non-numeric values and out-of-range values raise ConfigError.
RunConfig ParseConfig(std::string_view text);
RunConfig LoadConfig(const std::string &path);

// Inverse of ParseConfig, used for run manifests.
std::string FormatConfig(const RunConfig &config);

}  // namespace openforge

#endif  // OPENFORGE_CONFIG_H_
