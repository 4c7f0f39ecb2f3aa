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

#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.h"
#include "openforge/candidates.h"
#include "openforge/errors.h"
#include "openforge/ngram_stats.h"
#include "openforge/quality.h"
#include "openforge/segmentation.h"
#include "oracles.h"

namespace of = openforge;
namespace oft = openforge::testing;

namespace {

std::vector<of::PosPattern> Match(std::vector<std::string> tags) {
  return of::MatchPosPatterns(tags);
}

bool Has(const std::vector<of::PosPattern> &v, of::PosPattern p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

const of::PhraseCandidate *FindCandidate(const std::vector<of::PhraseCandidate> &c,
                                         const std::string &phrase) {
  for (const auto &x : c) {
    if (x.phrase == phrase) return &x;
  }
  return nullptr;
}

of::Corpus TenFiveTokenSentences() {
  of::Corpus corpus;
  for (int i = 0; i < 10; ++i) {
    corpus.sentences.push_back(oft::MakeSentence(
        "s" + std::to_string(i),
        {{i < 5 ? "London" : "Leeds", "NNP", 2, "nsubj"},
         {"grows", "VBZ", 0, "root"},
         {"of", "IN", 4, "case"},
         {"the", "DT", 2, "det"},
         {"United", "NNP", 2, "obl"}}));
    corpus.doc_ids.push_back("");
  }
  // One sentence adds "United Kingdom".
  corpus.sentences.push_back(oft::MakeSentence(
      "uk", {{"United", "NNP", 2, "compound"}, {"Kingdom", "NNP", 0, "root"}}));
  corpus.doc_ids.push_back("");
  return corpus;
}

}  // namespace

TEST_CASE("POS patterns") {
  CHECK(Has(Match({"NNP", "NNP", "IN", "NNP"}), of::PosPattern::kProperNounChunk));
  CHECK(Has(Match({"VBN", "IN"}), of::PosPattern::kVerbParticle));
  CHECK(Has(Match({"DT", "JJ", "NN", "NNS"}), of::PosPattern::kNounChunk));
  CHECK(Has(Match({"VBZ"}), of::PosPattern::kVerb));
  CHECK(Has(Match({"VBD", "DT", "NN", "IN"}), of::PosPattern::kVerbWordsParticle));
  CHECK(Match({"IN", "DT"}).empty());
  CHECK(of::IsEntityPattern(of::PosPattern::kNounChunk));
  CHECK_FALSE(of::IsEntityPattern(of::PosPattern::kVerb));
}

TEST_CASE("candidates and features") {
  of::Corpus corpus = TenFiveTokenSentences();
  of::RunConfig config;
  of::CorpusStats stats = of::CorpusStats::Build(corpus, config.epsilon);
  auto candidates = of::GenerateCandidates(corpus, stats, config);

  SUBCASE("empty corpus") {
    of::Corpus empty;
    CHECK(of::GenerateCandidates(empty, of::CorpusStats::Build(empty, 6), config).empty());
  }

  SUBCASE("London occurrence probability matches a linear scan") {
    int london = 0, unigrams = 0;
    for (const auto &s : corpus.sentences) {
      for (const auto &t : s.tokens) {
        ++unigrams;
        london += t.lemma == "london";
      }
    }
    const auto *c = FindCandidate(candidates, "london");
    REQUIRE(c != nullptr);
    of::FeatureVector f = of::ComputeFeatures(*c, stats);
    CHECK(f.raw_frequency == 5);
    CHECK(f.occurrence_probability == doctest::Approx(static_cast<double>(london) / unigrams));
    // Without the extra sentence the ratio is exactly 5 / 50.
    of::Corpus fifty = corpus;
    fifty.sentences.pop_back();
    fifty.doc_ids.pop_back();
    of::CorpusStats s50 = of::CorpusStats::Build(fifty, 6);
    CHECK(s50.OccurrenceProbability("london") == doctest::Approx(0.1));
  }

  SUBCASE("stopword and shape features") {
    const auto *of_the = FindCandidate(candidates, "of the");
    REQUIRE(of_the != nullptr);
    of::FeatureVector f = of::ComputeFeatures(*of_the, stats);
    CHECK(f.stopword_ratio == 1.0);
    CHECK(f.first_is_stopword);

    const auto *uk = FindCandidate(candidates, "united kingdom");
    REQUIRE(uk != nullptr);
    CHECK(uk->entity_pattern);
    CHECK(of::ComputeFeatures(*uk, stats).all_capitalized);
  }

  SUBCASE("candidate invariants") {
    for (const auto &c : candidates) {
      CHECK(c.length >= 1);
      CHECK(c.length <= config.epsilon);
      CHECK(c.count >= 1);
      of::FeatureVector f = of::ComputeFeatures(c, stats);
      CHECK(f.occurrence_probability >= 0);
      CHECK(f.occurrence_probability <= 1);
      CHECK(f.stopword_ratio >= 0);
      CHECK(f.stopword_ratio <= 1);
    }
  }

  SUBCASE("unknown candidate") {
    of::PhraseCandidate ghost;
    ghost.phrase = "not there";
    ghost.length = 2;
    CHECK_THROWS_AS(of::ComputeFeatures(ghost, stats), of::LookupError);
  }
}

TEST_CASE("positive-only classifier separates synthetic types") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> noise(0, 1);
  struct Labeled {
    std::vector<of::PhraseCandidate> candidates;
    std::vector<of::FeatureVector> features;
    std::vector<of::SegmentType> truth;
  };
  auto make = [&](const std::string &tag, of::SegmentType type, Labeled &out) {
    of::PhraseCandidate c;
    c.phrase = tag;
    c.length = 1 + static_cast<int>(rng() % 3);
    c.count = 1 + static_cast<int>(rng() % 20);
    of::FeatureVector f;
    f.raw_frequency = c.count;
    f.occurrence_probability = noise(rng) * 0.1;
    f.concordance = noise(rng);
    f.completeness = noise(rng);
    f.length = c.length;
    f.first_capitalized = type == of::SegmentType::kEntity;
    f.all_capitalized = type == of::SegmentType::kEntity && noise(rng) < 0.5;
    f.entity_pattern = type == of::SegmentType::kEntity;
    f.relation_pattern = type == of::SegmentType::kRelation;
    f.first_is_stopword = type == of::SegmentType::kBackground;
    f.stopword_ratio = type == of::SegmentType::kBackground ? 0.5 + noise(rng) / 2
                                                            : noise(rng) / 4;
    out.candidates.push_back(c);
    out.features.push_back(f);
    out.truth.push_back(type);
  };
  auto generate = [&](const std::string &prefix) {
    Labeled out;
    for (int i = 0; i < 70; ++i) make(prefix + "ent" + std::to_string(i), of::SegmentType::kEntity, out);
    for (int i = 0; i < 70; ++i) make(prefix + "rel" + std::to_string(i), of::SegmentType::kRelation, out);
    for (int i = 0; i < 60; ++i) make(prefix + "bg" + std::to_string(i), of::SegmentType::kBackground, out);
    return out;
  };
  Labeled train = generate("train_");
  Labeled held_out = generate("test_");
  const auto &candidates = train.candidates;
  const auto &features = train.features;

  // Entities and relations are the seeds; background stays unlabeled.
  of::SeedLexicon seeds;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (train.truth[i] == of::SegmentType::kEntity) seeds.entity_seeds.insert(candidates[i].phrase);
    if (train.truth[i] == of::SegmentType::kRelation) seeds.relation_seeds.insert(candidates[i].phrase);
  }
  of::QualityModel model = of::TrainQualityClassifier(candidates, features, seeds, {});

  int correct = 0;
  for (size_t i = 0; i < held_out.features.size(); ++i) {
    of::TypeDistribution q = model.Predict(held_out.features[i]);
    CHECK(q[0] + q[1] + q[2] == doctest::Approx(1.0).epsilon(1e-9));
    correct += of::ArgmaxType(q) == held_out.truth[i];
  }
  CHECK(static_cast<double>(correct) / held_out.features.size() >= 0.95);

  SUBCASE("deterministic for a fixed seed") {
    of::QualityModel again = of::TrainQualityClassifier(candidates, features, seeds, {});
    for (const auto &f : features) CHECK(again.Predict(f) == model.Predict(f));
  }
  SUBCASE("no positives or no unlabeled pool") {
    CHECK_THROWS_AS(of::TrainQualityClassifier(candidates, features, of::SeedLexicon{}, {}),
                    of::TrainingError);
    of::SeedLexicon all;
    for (const auto &c : candidates) all.entity_seeds.insert(c.phrase);
    CHECK_THROWS_AS(of::TrainQualityClassifier(candidates, features, all, {}),
                    of::TrainingError);
  }
}

TEST_CASE("Viterbi equals brute-force enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    of::Sentence s = oft::RandomSentence(1 + static_cast<int>(rng() % 8), rng);
    auto model = oft::RandomModelFor(s, rng);
    const int epsilon = 1 + static_cast<int>(rng() % 6);
    of::Segmentation seg = of::SegmentViterbi(s, model.params, model.table, epsilon);
    double oracle = oft::BestTilingScore(s.size(), s.size(), [&](int b, int e) {
      return oft::OracleSpanScore(s, b, e, model, epsilon);
    });
    CHECK(seg.log_prob == doctest::Approx(oracle).epsilon(1e-12));
    // Segments tile the sentence and their scores add up.
    int pos = 0;
    double sum = 0;
    for (const auto &g : seg.segments) {
      CHECK(g.begin == pos);
      CHECK(g.end > g.begin);
      pos = g.end;
      sum += *oft::OracleSpanScore(s, g.begin, g.end, model, epsilon);
    }
    CHECK(pos == s.size());
    CHECK(sum == doctest::Approx(seg.log_prob).epsilon(1e-12));
  }
}

TEST_CASE("one-token sentence is a single segment") {
  of::Sentence s = oft::MakeSentence("one", {{"Hello", "UH", 0, "root"}});
  of::PhraseTable table;
  of::Segmentation seg = of::SegmentViterbi(s, of::InitialParams(table), table, 6);
  REQUIRE(seg.segments.size() == 1);
  CHECK(seg.segments[0].begin == 0);
  CHECK(seg.segments[0].end == 1);
}

TEST_CASE("theta re-estimation") {
  of::PhraseTable table;
  auto add = [&](const std::string &p, int len) {
    of::PhraseInfo info;
    info.length = len;
    info.count = 1;
    info.quality = {1, 0, 0};
    info.type = of::SegmentType::kEntity;
    table.Add(p, info);
  };
  for (const char *p : {"a", "b", "c", "d"}) add(p, 1);
  add("a b", 2);
  add("c d", 2);
  add("a b c", 3);

  auto seg_of = [](std::vector<std::pair<std::string, int>> parts) {
    of::Segmentation seg;
    int pos = 0;
    for (auto &[phrase, len] : parts) {
      of::Segment s;
      s.begin = pos;
      s.end = pos + len;
      s.phrase = phrase;
      pos += len;
      seg.segments.push_back(s);
    }
    return seg;
  };

  SUBCASE("only length-2 phrase observed three times") {
    std::vector<of::Segmentation> segs(3, seg_of({{"a b", 2}}));
    of::SegmentationParams p = of::UpdateTheta(segs, table);
    CHECK(p.observed.at("a b") == 1.0);
    CHECK(p.Theta("a b c", 3) == p.Floor(3));
    CHECK(p.Floor(3) == doctest::Approx(0.1 / 2));
  }
  SUBCASE("two of eight") {
    std::vector<of::Segmentation> segs = {
        seg_of({{"a", 1}, {"a", 1}, {"b", 1}, {"b", 1}}),
        seg_of({{"c", 1}, {"c", 1}, {"d", 1}, {"d", 1}})};
    of::SegmentationParams p = of::UpdateTheta(segs, table);
    CHECK(p.observed.at("a") == 0.25);
    // delta from a mean segment length of one.
    CHECK(p.delta == doctest::Approx(std::max(0.3, std::exp(-1.0))));
  }
  SUBCASE("observed mass per length sums to one and scored theta stays normalized") {
    std::vector<of::Segmentation> segs = {seg_of({{"a b", 2}, {"c", 1}, {"d", 1}}),
                                          seg_of({{"a", 1}, {"c d", 2}, {"c", 1}})};
    of::SegmentationParams p = of::UpdateTheta(segs, table);
    std::map<int, double> observed, scored;
    for (const auto &[phrase, v] : p.observed) observed[table.Find(phrase)->length] += v;
    for (const auto &[phrase, info] : table.entries()) {
      scored[info.length] += p.Theta(phrase, info.length);
    }
    for (auto [len, sum] : observed) CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    for (auto [len, sum] : scored) CHECK(sum <= 1.0 + 1e-12);
  }
}

TEST_CASE("segmentation EM on the synthetic corpus") {
  of::Corpus corpus = oft::SyntheticCorpus(20, 5);
  of::SeedLexicon seeds = oft::SyntheticSeeds();
  of::RunConfig config;
  of::SegmentationModel model = of::RunSegmentationEm(corpus, seeds, config);

  // One entry for the initial decode and one per iteration.
  REQUIRE(model.log_likelihood.size() == static_cast<size_t>(config.em_iters) + 1);
  for (size_t i = 1; i < model.log_likelihood.size(); ++i) {
    CHECK(model.log_likelihood[i] >= model.log_likelihood[i - 1] - 1e-9);
  }
  for (const auto &[phrase, info] : model.table.entries()) {
    CHECK(info.quality[0] + info.quality[1] + info.quality[2] ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  for (size_t i = 0; i < corpus.sentences.size(); ++i) {
    int pos = 0;
    for (const auto &s : model.segmentations[i].segments) {
      CHECK(s.begin == pos);
      if (s.type != of::SegmentType::kBackground) CHECK(s.length() <= config.epsilon);
      pos = s.end;
    }
    CHECK(pos == corpus.sentences[i].size());
  }

  SUBCASE("same seed, same result") {
    of::SegmentationModel again = of::RunSegmentationEm(corpus, seeds, config);
    CHECK(again.log_likelihood == model.log_likelihood);
    for (size_t i = 0; i < corpus.sentences.size(); ++i) {
      CHECK(again.segmentations[i].log_prob == model.segmentations[i].log_prob);
    }
  }
  SUBCASE("em_iters = 0 keeps the initial parameters") {
    of::RunConfig zero = config;
    zero.em_iters = 0;
    of::SegmentationModel m0 = of::RunSegmentationEm(corpus, seeds, zero);
    of::SegmentationParams init = of::InitialParams(m0.table);
    CHECK(m0.params.theta == init.theta);
    CHECK(m0.params.delta == init.delta);
  }
  SUBCASE("seed phrase quality exceeds the unlabeled mean") {
    double unlabeled_sum = 0;
    int unlabeled = 0;
    for (const auto &[phrase, info] : model.table.entries()) {
      if (!seeds.entity_seeds.count(phrase) && !seeds.relation_seeds.count(phrase)) {
        unlabeled_sum += info.quality[0];
        ++unlabeled;
      }
    }
    const of::PhraseInfo *seed = model.table.Find("amberg");
    REQUIRE(seed != nullptr);
    CHECK(seed->quality[0] > unlabeled_sum / unlabeled);
  }
}

TEST_CASE("seeded capital-city corpus yields typed segments") {
  of::Corpus corpus = of::LoadConllu(oft::DataPath("capitals.conllu"));
  of::SeedLexicon seeds = of::LoadSeedLexicon(oft::DataPath("capitals_seeds.tsv"));
  of::SegmentationModel model = of::RunSegmentationEm(corpus, seeds, of::RunConfig{});
  const of::Segmentation &first = model.segmentations[0];
  bool london = false, capital_of = false;
  for (const auto &s : first.segments) {
    london |= s.phrase == "london" && s.type == of::SegmentType::kEntity;
    capital_of |= s.phrase == "capital of" && s.type == of::SegmentType::kRelation;
  }
  CHECK(london);
  CHECK(capital_of);
}
