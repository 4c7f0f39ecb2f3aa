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

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "fixtures.h"
#include "openforge/corpus.h"
#include "openforge/embedding.h"
#include "openforge/joint.h"
#include "openforge/segmentation.h"
#include "openforge/seeds.h"
#include "oracles.h"

namespace of = openforge;
namespace oft = openforge::testing;

namespace {

void BM_SegmentViterbi(benchmark::State &state) {
  std::mt19937_64 rng(1);
  of::Sentence s = oft::RandomSentence(static_cast<int>(state.range(0)), rng);
  auto model = oft::RandomModelFor(s, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(of::SegmentViterbi(s, model.params, model.table, 6));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SegmentViterbi)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_SegmentCorpus(benchmark::State &state) {
  of::Corpus corpus = oft::SyntheticCorpusWithTokens(static_cast<int>(state.range(0)), 3);
  of::RunConfig config;
  config.em_iters = 0;
  auto model = of::RunSegmentationEm(corpus, oft::SyntheticSeeds(), config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(of::SegmentCorpus(corpus, model.params, model.table, 6));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SegmentCorpus)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

// One stochastic epoch over a random triple set.
void BM_MarginEpoch(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const int entities = n / 4 + 2;
  std::vector<std::string> ent, rel;
  for (int i = 0; i < entities; ++i) ent.push_back("e" + std::to_string(i));
  for (int i = 0; i < 50; ++i) rel.push_back("r" + std::to_string(i));
  std::mt19937_64 rng(5);
  std::vector<of::Triple> positives;
  for (int i = 0; i < n; ++i) {
    of::Triple t{static_cast<int>(rng() % entities), {static_cast<int>(rng() % 50)},
                 static_cast<int>(rng() % entities)};
    if (t.head != t.tail) positives.push_back(t);
  }
  of::EmbeddingTable table = of::InitEmbeddings(ent, rel, 100, 9);
  of::MarginTrainingOptions opt;
  opt.max_epochs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(of::TrainMargin(positives, table, opt, rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(positives.size()));
}
BENCHMARK(BM_MarginEpoch)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_RunJointCapitals(benchmark::State &state) {
  of::Corpus corpus = of::LoadConllu(oft::DataPath("capitals.conllu"));
  of::SeedLexicon seeds = of::LoadSeedLexicon(oft::DataPath("capitals_seeds.tsv"));
  of::RunConfig config;
  config.rng_seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(of::RunJoint(corpus, seeds, config));
  }
}
BENCHMARK(BM_RunJointCapitals)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
