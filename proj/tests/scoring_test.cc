// Copyright 2026 The kvdsum Authors.
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

#include "kvdsum/scoring.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kvdsum/errors.h"
#include "test_util.h"

namespace kvdsum {
namespace {

std::vector<Proposition> WorkedExampleProps() {
  return PropositionsFromJson(testing::ReadAll(testing::Fixture("table1.props.json")));
}

Document WorkedExampleDoc() {
  return LoadCorpus(testing::Fixture("table1.jsonl")).documents.at(0);
}

TEST(HeuristicNamesTest, TwelveCombinations) {
  const auto& names = HeuristicNames();
  ASSERT_EQ(names.size(), 12u);
  EXPECT_EQ(names.front(), "cnt-cnt");
  EXPECT_EQ(names.back(), "sub-exp");
  for (const auto& n : names) {
    auto parsed = ParseHeuristicName(n);
    ASSERT_TRUE(parsed);
    EXPECT_EQ(HeuristicName(parsed->first, parsed->second), n);
  }
  EXPECT_FALSE(ParseHeuristicName("Sub-Exp"));
  EXPECT_FALSE(ParseHeuristicName("sub"));
  EXPECT_FALSE(ParseHeuristicName("lead"));
}

TEST(OccurrenceScoreTest, FourScorers) {
  Occurrence root{10, 2, SectionKind::kIntroduction, 1, 2, 5};
  EXPECT_EQ(OccurrenceScore(root, OccurrenceScorer::kCnt), 1.0);
  EXPECT_EQ(OccurrenceScore(root, OccurrenceScorer::kLvl), 1.0);
  EXPECT_EQ(OccurrenceScore(root, OccurrenceScorer::kDeg), 2.0);
  EXPECT_EQ(OccurrenceScore(root, OccurrenceScorer::kSub), 5.0);
  Occurrence leaf{13, 2, SectionKind::kIntroduction, 4, 1, 1};
  EXPECT_EQ(OccurrenceScore(leaf, OccurrenceScorer::kLvl), 0.25);
  EXPECT_EQ(OccurrenceScore(leaf, OccurrenceScorer::kSub), 1.0);
  EXPECT_EQ(OccurrenceScore(leaf, OccurrenceScorer::kCnt), 1.0);
}

TEST(AggregateTest, WorkedExamples) {
  const SectionRatios fixed{0.33, 0.53, 0.14};
  const SectionSums sums{{SectionKind::kIntroduction, 2.0},
                         {SectionKind::kDiscussion, 1.0}};
  EXPECT_DOUBLE_EQ(Aggregate(sums, Aggregator::kCnt, fixed), 3.0);
  EXPECT_NEAR(Aggregate(sums, Aggregator::kWgt, fixed), 1.19, 1e-12);
  EXPECT_NEAR(Aggregate(sums, Aggregator::kExp, fixed), 2.2571, 1e-4);
  EXPECT_NEAR(Aggregate(sums, Aggregator::kExp, fixed),
              std::pow(2.0, 0.33) + 1.0, 1e-12);
}

TEST(AggregateTest, SingleSectionWithUnitRatioCollapses) {
  const SectionRatios unit{1.0, 0.0, 0.0};
  for (double s : {0.0, 0.5, 1.0, 7.25}) {
    const SectionSums sums{{SectionKind::kIntroduction, s}};
    const double cnt = Aggregate(sums, Aggregator::kCnt, unit);
    EXPECT_DOUBLE_EQ(Aggregate(sums, Aggregator::kWgt, unit), cnt);
    EXPECT_DOUBLE_EQ(Aggregate(sums, Aggregator::kExp, unit), cnt);
  }
}

TEST(AggregateTest, ZeroSumContributesNothingToExp) {
  const SectionRatios r{0.33, 0.53, 0.14};
  EXPECT_EQ(Aggregate({{SectionKind::kConclusion, 0.0}}, Aggregator::kExp, r), 0.0);
}

TEST(ReproductionProbabilityTest, ClosedForm) {
  EXPECT_EQ(ReproductionProbability(0, 0.3), 0.0);
  EXPECT_NEAR(ReproductionProbability(1, 0.3), 0.3, 1e-12);
  EXPECT_NEAR(ReproductionProbability(2, 0.3), 0.51, 1e-12);
  EXPECT_NEAR(ReproductionProbability(3, 0.3), 0.657, 1e-12);
  EXPECT_NEAR(ReproductionProbability(1.19, 0.3), 0.3459, 1e-4);
  EXPECT_NEAR(ReproductionProbability(1.19, 0.3), 1 - std::pow(0.7, 1.19), 1e-14);
}

TEST(ReproductionProbabilityTest, RejectsBadRho) {
  for (double rho : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
    EXPECT_THROW(ReproductionProbability(1, rho), ConfigError) << rho;
  }
  EXPECT_THROW(ReproductionProbability(-1, 0.3), ConfigError);
}

TEST(ReproductionProbabilityTest, MonotoneAndBounded) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> n_dist(0.0, 50.0);
  std::uniform_real_distribution<double> rho_dist(1e-6, 1 - 1e-6);
  for (int i = 0; i < 1000; ++i) {
    const double rho = rho_dist(rng);
    double a = n_dist(rng), b = n_dist(rng);
    if (a > b) std::swap(a, b);
    const double va = ReproductionProbability(a, rho);
    const double vb = ReproductionProbability(b, rho);
    EXPECT_GE(va, 0.0);
    EXPECT_LT(vb, 1.0);
    EXPECT_LE(va, vb);
  }
}

TEST(HeuristicConfigTest, Validation) {
  HeuristicConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.rho = 1.0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg.rho = 0.3;
  cfg.memory_limit = 0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
}

TEST(SentenceScoresTest, WorkedExampleSubCnt) {
  const Document doc = WorkedExampleDoc();
  const auto props = WorkedExampleProps();
  const SimulationTrace trace = RunSimulation(doc, props, 5);
  HeuristicConfig cfg{OccurrenceScorer::kSub, Aggregator::kCnt, 0.3,
                      RatioMode::kFixed, 5};
  const auto v = PropositionScores(doc, trace, cfg);
  // 10: subtree 5 in cycle 2, subtree 1 in cycle 3.
  EXPECT_NEAR(v.at(10), 1 - std::pow(0.7, 6), 1e-12);
  EXPECT_NEAR(v.at(10), 0.8824, 1e-4);
  // 1 and 6 never made it into a pruned tree.
  EXPECT_FALSE(v.count(1));
  EXPECT_FALSE(v.count(6));

  const auto scored = SentenceScores(doc, props, trace, cfg);
  ASSERT_EQ(scored.size(), 3u);
  double s1 = 0.0;
  for (const Proposition& p : props) {
    if (p.sentence_id == 1 && v.count(p.id)) s1 += v.at(p.id);
  }
  EXPECT_NEAR(scored[1].score, s1, 1e-12);
  EXPECT_EQ(scored[1].length, doc.sentences[1].length());
}

TEST(SentenceScoresTest, CntCntRecountsCycles) {
  const Document doc = WorkedExampleDoc();
  const auto props = WorkedExampleProps();
  const SimulationTrace trace = RunSimulation(doc, props, 5);
  HeuristicConfig cfg{OccurrenceScorer::kCnt, Aggregator::kCnt, 0.3,
                      RatioMode::kFixed, 5};
  const auto v = PropositionScores(doc, trace, cfg);
  for (const Proposition& p : props) {
    int k = 0;
    for (const CycleSnapshot& c : trace.cycles) k += c.NodeIds().count(p.id);
    const double expected = 1 - std::pow(0.7, k);
    EXPECT_NEAR(v.count(p.id) ? v.at(p.id) : 0.0, expected, 1e-12) << p.id;
  }
}

TEST(SentenceScoresTest, PermutingPropositionsChangesNothing) {
  const Document doc = WorkedExampleDoc();
  auto props = WorkedExampleProps();
  const SimulationTrace trace = RunSimulation(doc, props, 5);
  HeuristicConfig cfg{OccurrenceScorer::kDeg, Aggregator::kExp, 0.3,
                      RatioMode::kPerDocument, 5};
  const auto a = SentenceScores(doc, props, trace, cfg);
  std::reverse(props.begin(), props.end());
  const auto b = SentenceScores(doc, props, trace, cfg);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i].score, b[i].score, 1e-12);
}

TEST(SentenceScoresTest, BoundedOccurrenceScores) {
  const Document doc = WorkedExampleDoc();
  const SimulationTrace trace = RunSimulation(doc, WorkedExampleProps(), 5);
  for (const Occurrence& x : trace.occurrences) {
    EXPECT_LE(OccurrenceScore(x, OccurrenceScorer::kLvl), 1.0);
    EXPECT_LE(OccurrenceScore(x, OccurrenceScorer::kSub), 5.0);
  }
}

TEST(NoTreeScoresTest, CountsRepeatedKeys) {
  Document doc = testing::MakeDoc({3, 3, 3, 3});
  auto make = [](int id, int sentence, const std::string& pred,
                 const std::string& arg) {
    Proposition p;
    p.id = id;
    p.kind = PropKind::kModifier;
    p.predicate = WordSpan{{pred}, {pred}};
    p.args.push_back(Argument{"", WordSpan{{arg}, {arg}}});
    p.sentence_id = sentence;
    return p;
  };
  std::vector<Proposition> props = {make(1, 0, "big", "cell"),
                                    make(2, 1, "big", "cell"),
                                    make(3, 2, "big", "cell"),
                                    make(4, 2, "small", "cell")};
  const auto scored = NoTreeScores(doc, props, 0.3);
  EXPECT_NEAR(scored[0].score, 0.657, 1e-12);
  EXPECT_NEAR(scored[1].score, 0.657, 1e-12);
  EXPECT_NEAR(scored[2].score, 0.657 + 0.3, 1e-12);
  EXPECT_EQ(scored[3].score, 0.0);
}

TEST(RandomScoresTest, DeterministicAndInRange) {
  using S = SectionKind;
  Document doc = testing::MakeDoc({2, 2, 2, 2, 2},
                                  {S::kIntroduction, S::kDiscussion, S::kDiscussion,
                                   S::kConclusion, S::kConclusion});
  const SectionRatios fixed{0.33, 0.53, 0.14};
  const auto a = RandomScores(doc, RandomKind::kUniform, fixed, 42);
  const auto b = RandomScores(doc, RandomKind::kUniform, fixed, 42);
  const auto c = RandomScores(doc, RandomKind::kUniform, fixed, 43);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].score, b[i].score);
    EXPECT_GE(a[i].score, 0.0);
    EXPECT_LT(a[i].score, 1.0);
    differs = differs || a[i].score != c[i].score;
  }
  EXPECT_TRUE(differs);

  Document other = doc;
  other.id = "another";
  EXPECT_NE(RandomScores(other, RandomKind::kUniform, fixed, 42)[0].score, a[0].score);

  const SectionRatios no_conclusion{0.5, 0.5, 0.0};
  const auto w = RandomScores(doc, RandomKind::kSectionWeighted, no_conclusion, 42);
  EXPECT_EQ(w[3].score, 0.0);
  EXPECT_EQ(w[4].score, 0.0);
  EXPECT_DOUBLE_EQ(w[1].score, a[1].score * 0.5);
}

}  // namespace
}  // namespace kvdsum
