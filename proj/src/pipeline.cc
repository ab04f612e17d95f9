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

#include "kvdsum/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "kvdsum/conllu.h"
#include "kvdsum/errors.h"
#include "kvdsum/propositionizer.h"

namespace kvdsum {
namespace {

using nlohmann::ordered_json;

void WriteFile(const std::filesystem::path& path, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) {
    throw IoError("cannot create " + path.parent_path().string() + ": " +
                  ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out) throw IoError("cannot write " + path.string());
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

bool IsHeuristic(const std::string& method) {
  return ParseHeuristicName(method).has_value();
}

ordered_json ConfigJson(const RunConfig& cfg) {
  return ordered_json{
      {"corpus", cfg.corpus.generic_string()},
      {"parses", cfg.parses.generic_string()},
      {"heuristic", cfg.heuristic},
      {"memory_limit", cfg.memory_limit},
      {"rho", cfg.rho},
      {"budget", cfg.budget},
      {"strategy", std::string(StrategyName(cfg.strategy))},
      {"ratios", cfg.ratios == RatioMode::kFixed ? "fixed" : "per-doc"},
      {"seed", cfg.seed}};
}

ordered_json FailuresJson(const std::vector<std::pair<std::string, std::string>>& failures) {
  ordered_json out = ordered_json::array();
  for (const auto& [id, error] : failures) {
    out.push_back(ordered_json{{"article_id", id}, {"error", error}});
  }
  return out;
}

ordered_json SentencesJson(const Document& doc, const std::vector<int>& ids) {
  ordered_json out = ordered_json::array();
  for (int id : ids) {
    out.push_back(ordered_json{{"id", id},
                               {"section", std::string(SectionName(doc.sentences[id].section))},
                               {"text", doc.sentences[id].Text()}});
  }
  return out;
}

// Oracle summaries for every usable document, keyed by position.
std::vector<std::optional<SummaryCandidate>> Oracles(const PreparedCorpus& pc,
                                                     const RunConfig& cfg,
                                                     std::vector<std::string>* errors) {
  const int n = static_cast<int>(pc.documents.size());
  std::vector<std::optional<SummaryCandidate>> out(n);
  errors->assign(n, "");
  ParallelFor(n, cfg.threads, [&](int i) {
    const PreparedDocument& pd = pc.documents[i];
    if (pd.error) return;
    try {
      out[i] = OracleExtract(pd.doc, cfg.budget);
    } catch (const Error& e) {
      (*errors)[i] = e.what();
    }
  });
  return out;
}

std::vector<DocumentResult> RunMethod(
    const PreparedCorpus& pc, const std::string& method, const RunConfig& cfg,
    const std::vector<std::optional<SimulationTrace>>* traces,
    const std::vector<std::optional<SummaryCandidate>>& oracles,
    const std::vector<std::string>& oracle_errors) {
  const int n = static_cast<int>(pc.documents.size());
  std::vector<DocumentResult> results(n);
  ParallelFor(n, cfg.threads, [&](int i) {
    const PreparedDocument& pd = pc.documents[i];
    DocumentResult& r = results[i];
    r.article_id = pd.doc.id;
    if (pd.error) {
      r.error = pd.error;
      return;
    }
    if (!oracles[i]) {
      r.error = oracle_errors[i];
      return;
    }
    const SimulationTrace* trace = nullptr;
    if (traces != nullptr && (*traces)[i]) trace = &*(*traces)[i];
    try {
      r = SummarizeDocument(pd, method, cfg, trace);
      r.eval = Evaluate(pd.doc, r.summary, *oracles[i]);
    } catch (const Error& e) {
      r = DocumentResult{};
      r.article_id = pd.doc.id;
      r.error = e.what();
    }
  });
  return results;
}

std::vector<std::optional<SimulationTrace>> Simulate(const PreparedCorpus& pc,
                                                     int memory_limit,
                                                     int threads) {
  const int n = static_cast<int>(pc.documents.size());
  std::vector<std::optional<SimulationTrace>> traces(n);
  ParallelFor(n, threads, [&](int i) {
    const PreparedDocument& pd = pc.documents[i];
    if (pd.error) return;
    try {
      traces[i] = RunSimulation(pd.doc, pd.props, memory_limit);
    } catch (const Error&) {
      // Left empty; SummarizeDocument reports the missing trace.
    }
  });
  return traces;
}

}  // namespace

const std::vector<std::string>& BaselineNames() {
  static const std::vector<std::string> names = {
      "lead", "longest", "random", "random-wgt", "notree", "oracle"};
  return names;
}

bool IsKnownMethod(const std::string& name) {
  const auto& b = BaselineNames();
  return IsHeuristic(name) || std::find(b.begin(), b.end(), name) != b.end();
}

void RunConfig::Validate() const {
  if (!IsKnownMethod(heuristic)) {
    std::string valid;
    for (const auto& n : HeuristicNames()) valid += " " + n;
    for (const auto& n : BaselineNames()) valid += " " + n;
    throw ConfigError("unknown heuristic '" + heuristic + "'; valid names:" +
                      valid);
  }
  if (memory_limit < 1) throw ConfigError("--memory-limit must be at least 1");
  if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("--rho must lie in (0, 1)");
  if (budget < 1) throw ConfigError("--budget must be at least 1");
}

PreparedCorpus PrepareCorpus(const RunConfig& cfg) {
  CorpusLoadResult loaded = LoadCorpus(cfg.corpus);
  const std::filesystem::path dir =
      cfg.parses.empty() ? cfg.corpus.parent_path() : cfg.parses;
  PreparedCorpus pc;
  pc.warnings = std::move(loaded.warnings);
  for (Document& doc : loaded.documents) {
    pc.documents.push_back(PreparedDocument{std::move(doc), {}, std::nullopt});
  }
  std::sort(pc.documents.begin(), pc.documents.end(),
            [](const PreparedDocument& a, const PreparedDocument& b) {
              return a.doc.id < b.doc.id;
            });
  for (std::size_t i = 1; i < pc.documents.size(); ++i) {
    if (pc.documents[i].doc.id == pc.documents[i - 1].doc.id) {
      throw ParseError("duplicate article_id " + pc.documents[i].doc.id, 0);
    }
  }
  ParallelFor(static_cast<int>(pc.documents.size()), cfg.threads, [&](int i) {
    PreparedDocument& pd = pc.documents[i];
    try {
      const auto parses = ReadConllu(dir / (pd.doc.id + ".conllu"));
      pd.props = ExtractDocumentPropositions(pd.doc, parses);
    } catch (const Error& e) {
      pd.error = e.what();
    }
  });
  return pc;
}

void ParallelFor(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

DocumentResult SummarizeDocument(const PreparedDocument& pd,
                                 const std::string& method,
                                 const RunConfig& cfg,
                                 const SimulationTrace* trace) {
  const Document& doc = pd.doc;
  DocumentResult r;
  r.article_id = doc.id;
  const SectionRatios ratios = ComputeSectionRatios(doc, cfg.ratios);
  if (auto parsed = ParseHeuristicName(method)) {
    if (trace == nullptr) throw Error("no simulation trace for " + doc.id);
    HeuristicConfig hc{parsed->first, parsed->second, cfg.rho, cfg.ratios,
                       cfg.memory_limit};
    r.scores = SentenceScores(doc, pd.props, *trace, hc);
  } else if (method == "notree") {
    r.scores = NoTreeScores(doc, pd.props, cfg.rho);
  } else if (method == "random" || method == "random-wgt") {
    r.scores = RandomScores(
        doc, method == "random" ? RandomKind::kUniform : RandomKind::kSectionWeighted,
        ratios, cfg.seed);
  } else if (method == "lead") {
    r.summary = SelectLead(doc, cfg.budget);
    return r;
  } else if (method == "longest") {
    r.summary = SelectLongest(doc, cfg.budget);
    return r;
  } else if (method == "oracle") {
    r.summary = OracleExtract(doc, cfg.budget);
    return r;
  } else {
    throw ConfigError("unknown heuristic '" + method + "'");
  }
  r.summary = Select(r.scores, cfg.budget, cfg.strategy);
  return r;
}

ReportRow Aggregate(const std::string& heuristic, int memory_limit,
                    const std::vector<DocumentResult>& results) {
  ReportRow row;
  row.heuristic = heuristic;
  row.memory_limit = memory_limit;
  std::vector<int> lengths;
  int q_count = 0;
  for (const DocumentResult& r : results) {
    if (r.error) {
      ++row.failures;
      continue;
    }
    ++row.documents;
    row.r1 += r.eval.r1;
    row.r2 += r.eval.r2;
    row.rl += r.eval.rl;
    if (r.eval.q_diff) {
      row.q_diff += *r.eval.q_diff;
      ++q_count;
    }
    lengths.push_back(r.summary.total_tokens);
  }
  if (row.documents > 0) {
    row.r1 = 100.0 * row.r1 / row.documents;
    row.r2 = 100.0 * row.r2 / row.documents;
    row.rl = 100.0 * row.rl / row.documents;
    const LengthStats st = ComputeLengthStats(lengths);
    row.mean_len = st.mean;
    row.std_len = st.stddev;
  }
  if (q_count > 0) row.q_diff /= q_count;
  return row;
}

std::string ReportHeader() {
  return "heuristic\tM\tR1\tR2\tRL\tq_diff\tmean_len\tstd_len\n";
}

std::string FormatRow(const ReportRow& row) {
  return row.heuristic + "\t" + std::to_string(row.memory_limit) + "\t" +
         Fixed(row.r1, 4) + "\t" + Fixed(row.r2, 4) + "\t" + Fixed(row.rl, 4) +
         "\t" + Fixed(row.q_diff, 4) + "\t" + Fixed(row.mean_len, 4) + "\t" +
         Fixed(row.std_len, 4) + "\n";
}

int CmdSummarize(const RunConfig& cfg) {
  cfg.Validate();
  const PreparedCorpus pc = PrepareCorpus(cfg);
  std::vector<std::string> oracle_errors;
  const auto oracles = Oracles(pc, cfg, &oracle_errors);
  std::vector<std::optional<SimulationTrace>> traces;
  if (IsHeuristic(cfg.heuristic)) traces = Simulate(pc, cfg.memory_limit, cfg.threads);
  const auto results =
      RunMethod(pc, cfg.heuristic, cfg, IsHeuristic(cfg.heuristic) ? &traces : nullptr,
                oracles, oracle_errors);

  std::vector<std::pair<std::string, std::string>> failures;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const DocumentResult& r = results[i];
    if (r.error) {
      failures.emplace_back(r.article_id, *r.error);
      continue;
    }
    const Document& doc = pc.documents[i].doc;
    ordered_json scores = ordered_json::array();
    for (const ScoredSentence& s : r.scores) scores.push_back(s.score);
    ordered_json j{{"article_id", r.article_id},
                   {"heuristic", cfg.heuristic},
                   {"memory_limit", cfg.memory_limit},
                   {"strategy", std::string(StrategyName(cfg.strategy))},
                   {"budget", cfg.budget},
                   {"sentence_ids", r.summary.sentence_ids},
                   {"sentences", SentencesJson(doc, r.summary.sentence_ids)},
                   {"total_tokens", r.summary.total_tokens},
                   {"scores", std::move(scores)},
                   {"r1", r.eval.r1},
                   {"r2", r.eval.r2},
                   {"rl", r.eval.rl}};
    j["q_diff"] = r.eval.q_diff ? ordered_json(*r.eval.q_diff) : ordered_json(nullptr);
    WriteFile(cfg.out / "summaries" / (r.article_id + ".json"), j.dump(2) + "\n");
  }
  WriteFile(cfg.out / "report.tsv",
            ReportHeader() + FormatRow(Aggregate(cfg.heuristic, cfg.memory_limit, results)));
  ordered_json manifest{{"command", "summarize"},
                        {"config", ConfigJson(cfg)},
                        {"documents", results.size()},
                        {"succeeded", results.size() - failures.size()},
                        {"failures", FailuresJson(failures)},
                        {"warnings", pc.warnings}};
  WriteFile(cfg.out / "manifest.json", manifest.dump(2) + "\n");
  return static_cast<int>(failures.size());
}

int CmdSimulate(const RunConfig& cfg) {
  if (cfg.memory_limit < 1) throw ConfigError("--memory-limit must be at least 1");
  const PreparedCorpus pc = PrepareCorpus(cfg);
  const int n = static_cast<int>(pc.documents.size());
  std::vector<std::string> bodies(n);
  std::vector<std::string> errors(n);
  ParallelFor(n, cfg.threads, [&](int i) {
    const PreparedDocument& pd = pc.documents[i];
    if (pd.error) {
      errors[i] = *pd.error;
      return;
    }
    try {
      const SimulationTrace trace =
          RunSimulation(pd.doc, pd.props, cfg.memory_limit);
      for (const CycleSnapshot& c : trace.cycles) {
        if (static_cast<int>(c.nodes.size()) > cfg.memory_limit) {
          throw Error("cycle " + std::to_string(c.cycle) + " holds " +
                      std::to_string(c.nodes.size()) + " nodes");
        }
      }
      bodies[i] = TraceToJson(trace);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });
  std::vector<std::pair<std::string, std::string>> failures;
  for (int i = 0; i < n; ++i) {
    const std::string& id = pc.documents[i].doc.id;
    if (!errors[i].empty()) {
      failures.emplace_back(id, errors[i]);
      continue;
    }
    WriteFile(cfg.out / (id + ".trace.json"), bodies[i]);
    WriteFile(cfg.out / (id + ".props.json"), PropositionsToJson(pc.documents[i].props));
  }
  ordered_json manifest{{"command", "simulate"},
                        {"config", ConfigJson(cfg)},
                        {"documents", n},
                        {"succeeded", n - static_cast<int>(failures.size())},
                        {"failures", FailuresJson(failures)},
                        {"warnings", pc.warnings}};
  WriteFile(cfg.out / "manifest.json", manifest.dump(2) + "\n");
  return static_cast<int>(failures.size());
}

int CmdOracle(const RunConfig& cfg) {
  if (cfg.budget < 1) throw ConfigError("--budget must be at least 1");
  const PreparedCorpus pc = PrepareCorpus(cfg);
  std::vector<std::string> errors;
  const auto oracles = Oracles(pc, cfg, &errors);
  std::vector<std::pair<std::string, std::string>> failures;
  std::string proportions = "article_id\tintroduction\tdiscussion\tconclusion\ttokens\n";
  for (std::size_t i = 0; i < oracles.size(); ++i) {
    const Document& doc = pc.documents[i].doc;
    if (pc.documents[i].error) {
      failures.emplace_back(doc.id, *pc.documents[i].error);
      continue;
    }
    if (!oracles[i]) {
      failures.emplace_back(doc.id, errors[i]);
      continue;
    }
    const SummaryCandidate& o = *oracles[i];
    const auto q = SectionProportions(o, doc);
    ordered_json j{{"article_id", doc.id},
                   {"budget", cfg.budget},
                   {"sentence_ids", o.sentence_ids},
                   {"sentences", SentencesJson(doc, o.sentence_ids)},
                   {"total_tokens", o.total_tokens},
                   {"objective", o.total_score},
                   {"proportions", ordered_json{{"introduction", q[0]},
                                                {"discussion", q[1]},
                                                {"conclusion", q[2]}}}};
    WriteFile(cfg.out / "oracle" / (doc.id + ".json"), j.dump(2) + "\n");
    proportions += doc.id + "\t" + Fixed(q[0], 4) + "\t" + Fixed(q[1], 4) + "\t" +
                   Fixed(q[2], 4) + "\t" + std::to_string(o.total_tokens) + "\n";
  }
  WriteFile(cfg.out / "oracle_proportions.tsv", proportions);
  ordered_json manifest{{"command", "oracle"},
                        {"config", ConfigJson(cfg)},
                        {"documents", oracles.size()},
                        {"succeeded", oracles.size() - failures.size()},
                        {"failures", FailuresJson(failures)},
                        {"warnings", pc.warnings}};
  WriteFile(cfg.out / "manifest.json", manifest.dump(2) + "\n");
  return static_cast<int>(failures.size());
}

int CmdSweep(const RunConfig& cfg, const std::vector<std::string>& heuristics,
             const std::vector<int>& limits) {
  if (heuristics.empty()) throw ConfigError("sweep needs at least one heuristic");
  if (limits.empty()) throw ConfigError("sweep needs at least one memory limit");
  for (const std::string& h : heuristics) {
    RunConfig probe = cfg;
    probe.heuristic = h;
    probe.Validate();
  }
  for (int m : limits) {
    if (m < 1) throw ConfigError("memory limits must be at least 1");
  }
  const PreparedCorpus pc = PrepareCorpus(cfg);
  std::vector<std::string> oracle_errors;
  const auto oracles = Oracles(pc, cfg, &oracle_errors);

  std::string tsv = ReportHeader();
  ordered_json cells = ordered_json::array();
  int failures = 0;
  for (int m : limits) {
    RunConfig cell = cfg;
    cell.memory_limit = m;
    // One simulation per memory limit, shared by every heuristic.
    const auto traces = Simulate(pc, m, cfg.threads);
    for (const std::string& h : heuristics) {
      cell.heuristic = h;
      const auto results = RunMethod(pc, h, cell, &traces, oracles, oracle_errors);
      const ReportRow row = Aggregate(h, m, results);
      tsv += FormatRow(row);
      std::vector<std::pair<std::string, std::string>> cell_failures;
      for (const DocumentResult& r : results) {
        if (r.error) cell_failures.emplace_back(r.article_id, *r.error);
      }
      failures += static_cast<int>(cell_failures.size());
      cells.push_back(ordered_json{{"heuristic", h},
                                   {"memory_limit", m},
                                   {"succeeded", row.documents},
                                   {"failures", FailuresJson(cell_failures)}});
    }
  }
  WriteFile(cfg.out / "sweep.tsv", tsv);
  ordered_json manifest{{"command", "sweep"},
                        {"config", ConfigJson(cfg)},
                        {"documents", pc.documents.size()},
                        {"cells", std::move(cells)},
                        {"warnings", pc.warnings}};
  WriteFile(cfg.out / "manifest.json", manifest.dump(2) + "\n");
  return failures;
}

}  // namespace kvdsum
