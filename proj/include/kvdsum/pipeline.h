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

#ifndef KVDSUM_PIPELINE_H_
#define KVDSUM_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kvdsum/corpus.h"
#include "kvdsum/memory.h"
#include "kvdsum/metrics.h"
#include "kvdsum/proposition.h"
#include "kvdsum/scoring.h"
#include "kvdsum/selection.h"

namespace kvdsum {

// Baselines accepted wherever a heuristic name is.
const std::vector<std::string>& BaselineNames();
bool IsKnownMethod(const std::string& name);

struct RunConfig {
  std::filesystem::path corpus;
  std::filesystem::path parses;  // directory of <article_id>.conllu files
  std::string heuristic = "sub-exp";
  int memory_limit = 20;
  double rho = 0.3;
  int budget = kDefaultBudget;
  Strategy strategy = Strategy::kClosest;
  RatioMode ratios = RatioMode::kFixed;
  std::uint64_t seed = 0;
  std::filesystem::path out;
  int threads = 0;  // 0: hardware concurrency

  // Throws ConfigError on an unknown heuristic or out-of-range number.
  void Validate() const;
};

// A loaded document with its propositions, or the reason it is unusable.
struct PreparedDocument {
  Document doc;
  std::vector<Proposition> props;
  std::optional<std::string> error;
};

struct PreparedCorpus {
  std::vector<PreparedDocument> documents;  // sorted by article id
  std::vector<std::string> warnings;
};

// Loads the corpus (IoError/ParseError are fatal) and each document's parse;
// a missing or misaligned parse becomes a per-document error.
PreparedCorpus PrepareCorpus(const RunConfig& cfg);

// Runs `fn(i)` for i in [0, n) on a small worker pool.
void ParallelFor(int n, int threads, const std::function<void(int)>& fn);

struct DocumentResult {
  std::string article_id;
  std::optional<std::string> error;
  SummaryCandidate summary;
  std::vector<ScoredSentence> scores;
  EvalReport eval;
};

// Scores and selects one document with `method`. `trace` must be the
// simulation at cfg.memory_limit when `method` is a memory heuristic.
DocumentResult SummarizeDocument(const PreparedDocument& pd,
                                 const std::string& method,
                                 const RunConfig& cfg,
                                 const SimulationTrace* trace);

struct ReportRow {
  std::string heuristic;
  int memory_limit = 0;
  double r1 = 0.0;  // percent
  double r2 = 0.0;
  double rl = 0.0;
  double q_diff = 0.0;
  double mean_len = 0.0;
  double std_len = 0.0;
  int documents = 0;
  int failures = 0;
};

ReportRow Aggregate(const std::string& heuristic, int memory_limit,
                    const std::vector<DocumentResult>& results);

std::string ReportHeader();
std::string FormatRow(const ReportRow& row);

// Command bodies. Each writes under cfg.out (created if needed) and returns
// the number of per-document failures. Fatal I/O problems throw IoError.
int CmdSummarize(const RunConfig& cfg);
int CmdSimulate(const RunConfig& cfg);
int CmdOracle(const RunConfig& cfg);
int CmdSweep(const RunConfig& cfg, const std::vector<std::string>& heuristics,
             const std::vector<int>& limits);

}  // namespace kvdsum

#endif  // KVDSUM_PIPELINE_H_
