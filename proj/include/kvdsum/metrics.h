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

#ifndef KVDSUM_METRICS_H_
#define KVDSUM_METRICS_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kvdsum/corpus.h"
#include "kvdsum/selection.h"

namespace kvdsum {

// A text as a list of sentences, each a list of lowercased tokens.
using TokenSentences = std::vector<std::vector<std::string>>;

std::vector<std::string> Lowercased(std::span<const Token> tokens);

// Clipped n-gram recall. N-grams never cross a sentence boundary on either
// side. Throws Error on an empty reference or n < 1; a reference without any
// n-gram of that order scores 0.
double RougeNRecall(const TokenSentences& candidate,
                    const TokenSentences& reference, int n);

// Summary-level ROUGE-L recall: for each reference sentence, the union of its
// LCS matches against every candidate sentence, clipped by token counts,
// summed and divided by the reference length.
double RougeLRecall(const TokenSentences& candidate,
                    const TokenSentences& reference);

// Sum over the three sections of |oracle% - candidate%| in percentage points.
// Throws Error if either summary is empty.
double QDiff(const SummaryCandidate& candidate, const SummaryCandidate& oracle,
             const Document& doc);

// Sentence share per section, in percent.
std::array<double, 3> SectionProportions(const SummaryCandidate& summary,
                                         const Document& doc);

struct LengthStats {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

LengthStats ComputeLengthStats(std::span<const SummaryCandidate> summaries);
LengthStats ComputeLengthStats(std::span<const int> lengths);

struct EvalReport {
  double r1 = 0.0;
  double r2 = 0.0;
  double rl = 0.0;
  std::optional<double> q_diff;  // unset when either summary is empty
  int length = 0;
};

// Scores `summary` against the document's abstract and oracle summary.
EvalReport Evaluate(const Document& doc, const SummaryCandidate& summary,
                    const SummaryCandidate& oracle);

}  // namespace kvdsum

#endif  // KVDSUM_METRICS_H_
