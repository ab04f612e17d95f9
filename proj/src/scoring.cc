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

#include <algorithm>
#include <cmath>
#include <random>

#include "kvdsum/errors.h"

namespace kvdsum {
namespace {

constexpr std::array<std::pair<OccurrenceScorer, std::string_view>, 4>
    kScorerNames = {{{OccurrenceScorer::kCnt, "cnt"},
                     {OccurrenceScorer::kLvl, "lvl"},
                     {OccurrenceScorer::kDeg, "deg"},
                     {OccurrenceScorer::kSub, "sub"}}};
constexpr std::array<std::pair<Aggregator, std::string_view>, 3>
    kAggregatorNames = {{{Aggregator::kCnt, "cnt"},
                         {Aggregator::kWgt, "wgt"},
                         {Aggregator::kExp, "exp"}}};

std::vector<ScoredSentence> Blank(const Document& doc) {
  std::vector<ScoredSentence> out;
  out.reserve(doc.sentences.size());
  for (const Sentence& s : doc.sentences) {
    out.push_back(ScoredSentence{s.id, 0.0, s.length()});
  }
  return out;
}

void AddToSentence(std::vector<ScoredSentence>& out, int sentence_id,
                   double v) {
  if (sentence_id < 0 || sentence_id >= static_cast<int>(out.size())) {
    throw Error("proposition points at sentence " +
                std::to_string(sentence_id) + " outside the document");
  }
  out[sentence_id].score += v;
}

// FNV-1a, so the stream does not depend on std::hash.
std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

void HeuristicConfig::Validate() const {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw ConfigError("rho must lie in (0, 1), got " + std::to_string(rho));
  }
  if (memory_limit < 1) {
    throw ConfigError("memory limit must be at least 1");
  }
}

const std::vector<std::string>& HeuristicNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [s, sn] : kScorerNames) {
      for (const auto& [a, an] : kAggregatorNames) v.push_back(HeuristicName(s, a));
    }
    return v;
  }();
  return names;
}

std::string HeuristicName(OccurrenceScorer scorer, Aggregator aggregator) {
  std::string out;
  for (const auto& [s, sn] : kScorerNames) {
    if (s == scorer) out = sn;
  }
  for (const auto& [a, an] : kAggregatorNames) {
    if (a == aggregator) out += "-" + std::string(an);
  }
  return out;
}

std::optional<std::pair<OccurrenceScorer, Aggregator>> ParseHeuristicName(
    std::string_view name) {
  for (const auto& [s, sn] : kScorerNames) {
    for (const auto& [a, an] : kAggregatorNames) {
      if (name == HeuristicName(s, a)) return std::make_pair(s, a);
    }
  }
  return std::nullopt;
}

double OccurrenceScore(const Occurrence& x, OccurrenceScorer scorer) {
  switch (scorer) {
    case OccurrenceScorer::kCnt:
      return 1.0;
    case OccurrenceScorer::kLvl:
      return 1.0 / x.depth;
    case OccurrenceScorer::kDeg:
      return x.degree;
    case OccurrenceScorer::kSub:
      return x.subtree_size;
  }
  return 0.0;
}

double Aggregate(const SectionSums& sums, Aggregator aggregator,
                 const SectionRatios& ratios) {
  double n = 0.0;
  for (const auto& [section, sum] : sums) {
    switch (aggregator) {
      case Aggregator::kCnt:
        n += sum;
        break;
      case Aggregator::kWgt:
        n += ratios[section] * sum;
        break;
      case Aggregator::kExp:
        // 0^r is taken as 0 even for r = 0: an absent section adds nothing.
        if (sum > 0.0) n += std::exp(ratios[section] * std::log(sum));
        break;
    }
  }
  return n;
}

double ReproductionProbability(double n, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw ConfigError("rho must lie in (0, 1), got " + std::to_string(rho));
  }
  if (n < 0.0) throw ConfigError("participation count must be non-negative");
  // Once (1 - rho)^n drops below 2^-53 the difference rounds to 1.0; pin it
  // to the largest double below 1 so the range stays [0, 1).
  return std::min(-std::expm1(n * std::log1p(-rho)), kMaxReproduction);
}

std::map<int, double> PropositionScores(const Document& doc,
                                        const SimulationTrace& trace,
                                        const HeuristicConfig& cfg) {
  cfg.Validate();
  std::map<int, SectionSums> sums;
  for (const Occurrence& x : trace.occurrences) {
    sums[x.prop_id][x.section] += OccurrenceScore(x, cfg.scorer);
  }
  const SectionRatios ratios = ComputeSectionRatios(doc, cfg.ratios);
  std::map<int, double> v;
  for (const auto& [id, by_section] : sums) {
    v[id] = ReproductionProbability(
        Aggregate(by_section, cfg.aggregator, ratios), cfg.rho);
  }
  return v;
}

std::vector<ScoredSentence> SentenceScores(const Document& doc,
                                           std::span<const Proposition> props,
                                           const SimulationTrace& trace,
                                           const HeuristicConfig& cfg) {
  const std::map<int, double> v = PropositionScores(doc, trace, cfg);
  std::vector<ScoredSentence> out = Blank(doc);
  for (const Proposition& p : props) {
    auto it = v.find(p.id);
    if (it != v.end()) AddToSentence(out, p.sentence_id, it->second);
  }
  return out;
}

std::vector<ScoredSentence> NoTreeScores(const Document& doc,
                                         std::span<const Proposition> props,
                                         double rho) {
  std::map<PropKey, int> counts;
  std::vector<PropKey> keys;
  keys.reserve(props.size());
  for (const Proposition& p : props) {
    keys.push_back(MakePropKey(p, props));
    ++counts[keys.back()];
  }
  std::vector<ScoredSentence> out = Blank(doc);
  for (std::size_t i = 0; i < props.size(); ++i) {
    AddToSentence(out, props[i].sentence_id,
                  ReproductionProbability(counts[keys[i]], rho));
  }
  return out;
}

std::vector<ScoredSentence> RandomScores(const Document& doc, RandomKind kind,
                                         const SectionRatios& ratios,
                                         std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(Fnv1a(doc.id)),
                    static_cast<std::uint32_t>(Fnv1a(doc.id) >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<ScoredSentence> out = Blank(doc);
  for (ScoredSentence& s : out) {
    // 53 random bits: exact, platform-independent and strictly below 1.
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (kind == RandomKind::kSectionWeighted) {
      u *= ratios[doc.sentences[s.sentence_id].section];
    }
    s.score = u;
  }
  return out;
}

}  // namespace kvdsum
