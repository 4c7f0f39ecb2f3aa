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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "openforge/errors.h"
#include "openforge/io.h"
#include "openforge/metrics.h"
#include "oracles.h"

namespace of = openforge;
namespace oft = openforge::testing;

namespace {

of::ScoredTuple T(const std::string &sent, const std::string &head, const std::string &tail,
                  double conf, std::vector<std::string> predicate = {"rel"}) {
  return {sent, head, std::move(predicate), tail, conf};
}

std::vector<double> AllMetrics(const std::vector<int> &rel) {
  std::vector<double> out;
  for (int k : {1, 3, 10}) {
    out.push_back(of::PrecisionAtK(rel, k));
    out.push_back(of::NdcgAtK(rel, k));
  }
  out.push_back(of::AveragePrecision(rel));
  out.push_back(of::MeanReciprocalRank(rel));
  return out;
}

}  // namespace

TEST_CASE("rank and cut") {
  std::vector<of::ScoredTuple> five{T("s1", "a", "b", 0.1), T("s2", "c", "d", 0.9),
                                    T("s3", "e", "f", 0.5), T("s4", "g", "h", 0.7),
                                    T("s5", "i", "j", 0.3)};
  auto top = of::RankAndCut(five, 3);
  REQUIRE(top.size() == 3);
  CHECK(top[0].confidence == 0.9);
  CHECK(top[1].confidence == 0.7);
  CHECK(top[2].confidence == 0.5);

  std::vector<of::ScoredTuple> ties{T("s2", "a", "b", 1), T("s1", "z", "b", 1),
                                    T("s1", "a", "c", 1), T("s1", "a", "b", 1, {"y"}),
                                    T("s1", "a", "b", 1, {"x"})};
  auto ranked = of::RankAndCut(ties, 10);
  REQUIRE(ranked.size() == 5);
  CHECK(ranked[0].predicate == std::vector<std::string>{"x"});
  CHECK(ranked[1].predicate == std::vector<std::string>{"y"});
  CHECK(ranked[2].tail == "c");
  CHECK(ranked[3].head == "z");
  CHECK(ranked[4].sent_id == "s2");

  std::vector<of::ScoredTuple> many;
  for (int i = 0; i < 250; ++i) many.push_back(T("s" + std::to_string(i), "h", "t", i % 7));
  auto all = of::RankAndCut(many, 300);
  CHECK(all.size() == 250);
  for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].confidence >= all[i].confidence);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(many.begin(), many.end(), rng);
    auto again = of::RankAndCut(many, 300);
    for (size_t i = 0; i < all.size(); ++i) CHECK(of::CanonicalKey(again[i]) == of::CanonicalKey(all[i]));
  }
}

TEST_CASE("hand-computed ranking [1,0,1,0]") {
  const std::vector<int> rel{1, 0, 1, 0};
  CHECK(of::PrecisionAtK(rel, 2) == 0.5);
  CHECK(of::AveragePrecision(rel) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(of::MeanReciprocalRank(rel) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  const double dcg = 1.0 + 1.0 / std::log2(4.0);
  const double ideal = 1.0 + 1.0 / std::log2(3.0);
  CHECK(of::NdcgAtK(rel, 4) == doctest::Approx(dcg / ideal).epsilon(1e-15));
}

TEST_CASE("perfect and empty rankings") {
  const std::vector<int> good(7, 1);
  const std::vector<int> bad(7, 0);
  for (int k : {1, 4, 7}) {
    CHECK(of::PrecisionAtK(good, k) == 1.0);
    CHECK(of::NdcgAtK(good, k) == doctest::Approx(1.0));
    CHECK(of::PrecisionAtK(bad, k) == 0.0);
    CHECK(of::NdcgAtK(bad, k) == 0.0);
  }
  CHECK(of::AveragePrecision(good) == 1.0);
  CHECK(of::AveragePrecision(bad) == 0.0);
  CHECK(of::MeanReciprocalRank(bad) == 0.0);
  const std::vector<int> none;
  CHECK(of::PrecisionAtK(none, 5) == 0.0);
  CHECK(of::AveragePrecision(none) == 0.0);
}

TEST_CASE("non-positive k is rejected") {
  const std::vector<int> rel{1, 0};
  CHECK_THROWS_AS(of::PrecisionAtK(rel, 0), of::Error);
  CHECK_THROWS_AS(of::PrecisionAtK(rel, -3), of::Error);
  CHECK_THROWS_AS(of::NdcgAtK(rel, 0), of::Error);
  const std::vector<int> ks{10, 0};
  CHECK_THROWS_AS(of::EvaluateRanking(rel, ks), of::Error);
}

TEST_CASE("metrics equal brute force on random label vectors") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const double p = std::uniform_real_distribution<double>(0, 1)(rng);
    std::bernoulli_distribution coin(p);
    std::vector<int> rel(n);
    for (int &r : rel) r = coin(rng) ? 1 : 0;

    for (int k : {1, 2, 5, 10, 25, 50, 100}) {
      const double pk = of::PrecisionAtK(rel, k);
      const double nd = of::NdcgAtK(rel, k);
      CHECK(std::abs(pk - oft::OraclePrecisionAtK(rel, k)) <= 1e-12);
      CHECK(std::abs(nd - oft::OracleNdcgAtK(rel, k)) <= 1e-12);
      CHECK(pk >= 0);
      CHECK(pk <= 1);
      CHECK(nd >= 0);
      CHECK(nd <= 1 + 1e-12);
    }
    const double ap = of::AveragePrecision(rel);
    const double mrr = of::MeanReciprocalRank(rel);
    CHECK(std::abs(ap - oft::OracleAveragePrecision(rel)) <= 1e-12);
    CHECK(std::abs(mrr - oft::OracleMrr(rel)) <= 1e-12);
    CHECK(ap >= 0);
    CHECK(ap <= 1);
    CHECK(mrr >= 0);
    CHECK(mrr <= 1);

    std::vector<int> ideal = rel;
    std::sort(ideal.rbegin(), ideal.rend());
    if (std::count(rel.begin(), rel.end(), 1) > 0) {
      CHECK(of::NdcgAtK(ideal, n) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("equal-confidence permutations leave metrics unchanged") {
  std::mt19937_64 rng(31);
  std::vector<of::ScoredTuple> tuples;
  of::GoldLabels gold;
  for (int i = 0; i < 40; ++i) {
    auto t = T("s" + std::to_string(i % 9), "h" + std::to_string(i), "t", (i % 4) * 0.25);
    gold.Add(of::CanonicalKey(t), rng() % 2 == 0);
    tuples.push_back(t);
  }
  auto base = of::LabelRanking(of::RankAndCut(tuples, 30), gold);
  CHECK(base.unlabeled == 0);
  CHECK(base.relevance.size() == 30);
  for (int trial = 0; trial < 25; ++trial) {
    std::shuffle(tuples.begin(), tuples.end(), rng);
    auto again = of::LabelRanking(of::RankAndCut(tuples, 30), gold);
    CHECK(again.relevance == base.relevance);
    CHECK(AllMetrics(again.relevance) == AllMetrics(base.relevance));
  }
}

TEST_CASE("gold labels: parsing and lookup") {
  const std::string text =
      "sent_id\thead\tpredicate\ttail\tlabel\n"
      "f01\tLondon\tis|capital of\tEngland\t1\n"
      "f21\tcity\tis|capital of\tengland\t0\n"
      "\n";
  of::GoldLabels gold = of::ParseGold(text);
  CHECK(gold.size() == 2);
  auto hit = gold.Find(of::CanonicalKey("f01", "london", "is|capital of", "england"));
  REQUIRE(hit.has_value());
  CHECK(*hit);
  auto miss = gold.Find(of::CanonicalKey("f21", "city", "is|capital of", "england"));
  REQUIRE(miss.has_value());
  CHECK_FALSE(*miss);
  CHECK_FALSE(gold.Find(of::CanonicalKey("f99", "a", "b", "c")).has_value());

  std::vector<of::ScoredTuple> ranked{T("f01", "london", "england", 2, {"is", "capital of"}),
                                      T("f50", "x", "y", 1),
                                      T("f21", "city", "england", 0, {"is", "capital of"})};
  auto labeled = of::LabelRanking(ranked, gold);
  CHECK(labeled.relevance == std::vector<int>{1, 0});
  CHECK(labeled.unlabeled == 1);

  CHECK_THROWS_AS(of::ParseGold("a\tb\tc\td\n"), of::FormatError);
  CHECK_THROWS_AS(of::ParseGold("a\tb\tc\td\tyes\n"), of::FormatError);
  CHECK_THROWS_AS(of::ParseGold("a\tb\tc\td\t1\na\tB\tC\tD\t0\n"), of::FormatError);
  try {
    of::ParseGold("a\tb\tc\td\t1\nbroken\n");
    FAIL("expected a parse error");
  } catch (const of::ParseError &e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("metric report layout") {
  const std::vector<int> rel{1, 0, 1, 0};
  const std::vector<int> ks{2, 4};
  auto rows = of::EvaluateRanking(rel, ks);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].metric == "P");
  CHECK(rows[0].k == 2);
  CHECK(rows[4].metric == "MAP");
  CHECK(rows[5].metric == "MRR");
  const std::string tsv = of::MetricsToTsv(rows);
  CHECK(tsv.rfind("metric\tk\tvalue\n", 0) == 0);
  CHECK(tsv.find("P\t2\t0.5\n") != std::string::npos);
  CHECK(tsv.find("MAP\t-\t") != std::string::npos);
}

TEST_CASE("tuple dump round trip") {
  std::vector<of::ScoredTuple> tuples{T("f01", "london", "england", -1.25, {"is", "capital of"}),
                                      T("f02", "paris", "france", 0.5, {"become"})};
  std::vector<of::ScoredTuple> parsed;
  std::string text;
  for (const auto &t : tuples) {
    text += "{\"sent_id\":\"" + t.sent_id + "\",\"head\":\"" + t.head + "\",\"predicate\":[";
    for (size_t i = 0; i < t.predicate.size(); ++i) {
      text += (i ? ",\"" : "\"") + t.predicate[i] + "\"";
    }
    text += "],\"tail\":\"" + t.tail + "\",\"confidence\":" + std::to_string(t.confidence) + "}\n";
  }
  parsed = of::ParseTuplesJsonl(text);
  REQUIRE(parsed.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(of::CanonicalKey(parsed[i]) == of::CanonicalKey(tuples[i]));
    CHECK(parsed[i].confidence == tuples[i].confidence);
  }
  CHECK_THROWS_AS(of::ParseTuplesJsonl("{\"sent_id\": 1}\n"), of::ParseError);
  CHECK_THROWS_AS(of::ParseTuplesJsonl("not json\n"), of::ParseError);
}
