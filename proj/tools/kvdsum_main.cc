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

// Command-line front end: summarize, simulate, oracle and sweep.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kvdsum/errors.h"
#include "kvdsum/pipeline.h"

namespace {

constexpr int kUsageError = 1;
constexpr int kIoError = 2;

void AddInputs(CLI::App* cmd, kvdsum::RunConfig& cfg) {
  cmd->add_option("--corpus", cfg.corpus, "Corpus JSONL file")->required();
  cmd->add_option("--parses", cfg.parses,
                  "Directory of <article_id>.conllu parses (default: corpus dir)");
  cmd->add_option("--out", cfg.out, "Output directory")->required();
  cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
}

void AddScoring(CLI::App* cmd, kvdsum::RunConfig& cfg, std::string& strategy,
                std::string& ratios) {
  cmd->add_option("--rho", cfg.rho, "Reproduction probability")
      ->capture_default_str();
  cmd->add_option("--budget", cfg.budget, "Summary budget in tokens")
      ->capture_default_str();
  cmd->add_option("--strategy", strategy, "greedy | shorter | closest")
      ->check(CLI::IsMember({"greedy", "shorter", "closest"}))
      ->capture_default_str();
  cmd->add_option("--ratios", ratios, "Section ratios: fixed | per-doc")
      ->check(CLI::IsMember({"fixed", "per-doc"}))
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Seed for the random baselines")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  kvdsum::RunConfig cfg;
  std::string strategy = "closest";
  std::string ratios = "fixed";
  std::vector<std::string> heuristics;
  std::vector<int> limits;

  CLI::App app{"Memory-model extractive summarizer"};
  app.require_subcommand(1);

  CLI::App* summarize = app.add_subcommand("summarize", "Summarize a corpus");
  AddInputs(summarize, cfg);
  AddScoring(summarize, cfg, strategy, ratios);
  summarize->add_option("--heuristic", cfg.heuristic, "Heuristic or baseline")
      ->capture_default_str();
  summarize->add_option("--memory-limit", cfg.memory_limit, "Memory limit M")
      ->capture_default_str();

  CLI::App* simulate = app.add_subcommand("simulate", "Dump memory traces");
  AddInputs(simulate, cfg);
  simulate->add_option("--memory-limit", cfg.memory_limit, "Memory limit M")
      ->capture_default_str();

  CLI::App* oracle = app.add_subcommand("oracle", "Build oracle summaries");
  AddInputs(oracle, cfg);
  oracle->add_option("--budget", cfg.budget, "Summary budget in tokens")
      ->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "Heuristics x memory limits");
  AddInputs(sweep, cfg);
  AddScoring(sweep, cfg, strategy, ratios);
  sweep->add_option("--heuristics", heuristics, "Heuristics to evaluate")
      ->delimiter(',')
      ->required();
  sweep->add_option("--memory-limits", limits, "Memory limits")
      ->delimiter(',')
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  cfg.strategy = *kvdsum::StrategyFromName(strategy);
  cfg.ratios = ratios == "fixed" ? kvdsum::RatioMode::kFixed
                                 : kvdsum::RatioMode::kPerDocument;

  try {
    int failures = 0;
    if (summarize->parsed()) {
      failures = kvdsum::CmdSummarize(cfg);
    } else if (simulate->parsed()) {
      failures = kvdsum::CmdSimulate(cfg);
    } else if (oracle->parsed()) {
      failures = kvdsum::CmdOracle(cfg);
    } else {
      failures = kvdsum::CmdSweep(cfg, heuristics, limits);
    }
    if (failures > 0) {
      std::cerr << failures << " document(s) failed; see "
                << (cfg.out / "manifest.json").string() << "\n";
    }
    return 0;
  } catch (const kvdsum::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const kvdsum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
}
