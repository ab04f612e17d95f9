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

#ifndef KVDSUM_SELECTION_H_
#define KVDSUM_SELECTION_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kvdsum/corpus.h"
#include "kvdsum/scoring.h"

namespace kvdsum {

inline constexpr int kDefaultBudget = 205;

struct SummaryCandidate {
  std::vector<int> sentence_ids;  // ascending, i.e. document order
  int total_tokens = 0;
  double total_score = 0.0;

  bool empty() const { return sentence_ids.empty(); }
};

enum class Strategy { kGreedy, kShorter, kClosest };

std::string_view StrategyName(Strategy s);
std::optional<Strategy> StrategyFromName(std::string_view name);

// Highest scores first (ties: lower id); a sentence is taken whenever it
// still fits, and the scan continues past sentences that do not.
SummaryCandidate SelectGreedy(std::span<const ScoredSentence> scored,
                              int budget);

// Exact 0-1 knapsack. Among optimal sets the shorter one wins, then the
// lexicographically smallest id list.
SummaryCandidate SelectShorter(std::span<const ScoredSentence> scored,
                               int budget);

// Starts from the knapsack optimum S and also accepts an over-budget set T
// when score(T) > score(S) and |T| - W < W - |S|. The best such T wins (ties:
// closer to W, then smallest id list).
SummaryCandidate SelectClosest(std::span<const ScoredSentence> scored,
                               int budget);

SummaryCandidate Select(std::span<const ScoredSentence> scored, int budget,
                        Strategy strategy);

// Longest prefix of the document within budget.
SummaryCandidate SelectLead(const Document& doc, int budget);
// Longest sentences first (ties: lower id), skipping those that do not fit.
SummaryCandidate SelectLongest(const Document& doc, int budget);

// Objective of a sentence set: ROUGE-1 + ROUGE-2 recall against the abstract.
double OracleObjective(const Document& doc, std::span<const int> ids);

// Greedy forward selection on OracleObjective under the budget, stopping when
// no sentence improves it; one final over-budget sentence may be added if it
// improves the objective and meets the Closest length condition. Throws
// Error when the document has no abstract.
SummaryCandidate OracleExtract(const Document& doc, int budget);

// Fills total_tokens from the document; total_score is left untouched.
SummaryCandidate MakeCandidate(const Document& doc, std::vector<int> ids);

}  // namespace kvdsum

#endif  // KVDSUM_SELECTION_H_
