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

#ifndef KVDSUM_SCORING_H_
#define KVDSUM_SCORING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kvdsum/corpus.h"
#include "kvdsum/memory.h"
#include "kvdsum/proposition.h"

namespace kvdsum {

enum class OccurrenceScorer { kCnt, kLvl, kDeg, kSub };
enum class Aggregator { kCnt, kWgt, kExp };

struct HeuristicConfig {
  OccurrenceScorer scorer = OccurrenceScorer::kCnt;
  Aggregator aggregator = Aggregator::kCnt;
  double rho = 0.3;
  RatioMode ratios = RatioMode::kFixed;
  int memory_limit = 20;

  // Throws ConfigError unless rho lies in (0, 1) and memory_limit >= 1.
  void Validate() const;
};

// "cnt-cnt", ..., "sub-exp", in scorer-major order.
const std::vector<std::string>& HeuristicNames();
std::optional<std::pair<OccurrenceScorer, Aggregator>> ParseHeuristicName(
    std::string_view name);
std::string HeuristicName(OccurrenceScorer scorer, Aggregator aggregator);

struct ScoredSentence {
  int sentence_id = 0;
  double score = 0.0;
  int length = 0;
};

double OccurrenceScore(const Occurrence& x, OccurrenceScorer scorer);

// Per-section sums of occurrence scores for one proposition.
using SectionSums = std::map<SectionKind, double>;

double Aggregate(const SectionSums& sums, Aggregator aggregator,
                 const SectionRatios& ratios);

// Largest value ReproductionProbability returns: the double just below 1.
inline constexpr double kMaxReproduction = 1.0 - 0x1.0p-53;

// 1 - (1 - rho)^n, with the power taken through exp/log so that n may be
// fractional. Saturates at kMaxReproduction. Throws ConfigError for rho
// outside (0, 1) or negative n.
double ReproductionProbability(double n, double rho);

// v(p) for every proposition with at least one occurrence in the trace.
std::map<int, double> PropositionScores(const Document& doc,
                                        const SimulationTrace& trace,
                                        const HeuristicConfig& cfg);

// sc(s) = sum of v(p) over the propositions extracted from s.
std::vector<ScoredSentence> SentenceScores(const Document& doc,
                                           std::span<const Proposition> props,
                                           const SimulationTrace& trace,
                                           const HeuristicConfig& cfg);

// Like SentenceScores, but n(p) counts document propositions with the same
// PropKey instead of memory occurrences.
std::vector<ScoredSentence> NoTreeScores(const Document& doc,
                                         std::span<const Proposition> props,
                                         double rho);

enum class RandomKind { kUniform, kSectionWeighted };

// Uniform scores in [0, 1), optionally scaled by the sentence's section
// ratio. The stream depends only on (seed, document id).
std::vector<ScoredSentence> RandomScores(const Document& doc, RandomKind kind,
                                         const SectionRatios& ratios,
                                         std::uint64_t seed);

}  // namespace kvdsum

#endif  // KVDSUM_SCORING_H_
