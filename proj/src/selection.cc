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

#include "kvdsum/selection.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kvdsum/errors.h"
#include "kvdsum/metrics.h"

namespace kvdsum {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Float sums taken in different orders may differ in the last bits.
constexpr double kTieEps = 1e-12;

bool Better(double a, double b) { return a > b + kTieEps * std::max(1.0, std::abs(b)); }

void CheckInput(std::span<const ScoredSentence> scored, int budget) {
  if (budget < 1) throw ConfigError("budget must be at least 1");
  for (const ScoredSentence& s : scored) {
    if (s.length < 1) {
      throw Error("sentence " + std::to_string(s.sentence_id) +
                  " has no tokens");
    }
    if (!std::isfinite(s.score)) {
      throw Error("sentence " + std::to_string(s.sentence_id) +
                  " has a non-finite score");
    }
  }
}

SummaryCandidate Finish(std::span<const ScoredSentence> scored,
                        std::vector<std::size_t> picked) {
  std::sort(picked.begin(), picked.end(), [&](std::size_t a, std::size_t b) {
    return scored[a].sentence_id < scored[b].sentence_id;
  });
  SummaryCandidate c;
  for (std::size_t i : picked) {
    c.sentence_ids.push_back(scored[i].sentence_id);
    c.total_tokens += scored[i].length;
    c.total_score += scored[i].score;
  }
  return c;
}

// best[i][L]: highest score reachable with items i.. at total length exactly
// L. Items are visited in ascending sentence id so that forward
// reconstruction, which prefers taking an item, yields the smallest id list.
class ExactLengthTable {
 public:
  ExactLengthTable(std::span<const ScoredSentence> scored, int max_len)
      : max_len_(max_len) {
    order_.resize(scored.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return scored[a].sentence_id < scored[b].sentence_id;
    });
    const std::size_t n = order_.size();
    best_.assign((n + 1) * (max_len_ + 1), kNegInf);
    At(n, 0) = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      const ScoredSentence& s = scored[order_[i]];
      for (int len = 0; len <= max_len_; ++len) {
        double v = At(i + 1, len);
        if (len >= s.length && At(i + 1, len - s.length) != kNegInf) {
          v = std::max(v, At(i + 1, len - s.length) + s.score);
        }
        At(i, len) = v;
      }
    }
    scored_ = scored;
  }

  double Best(int len) const { return At(0, len); }

  std::vector<std::size_t> Reconstruct(int len) const {
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const ScoredSentence& s = scored_[order_[i]];
      if (len >= s.length && At(i + 1, len - s.length) != kNegInf &&
          !Better(At(i, len), At(i + 1, len - s.length) + s.score)) {
        picked.push_back(order_[i]);
        len -= s.length;
      }
    }
    return picked;
  }

 private:
  double& At(std::size_t i, int len) { return best_[i * (max_len_ + 1) + len]; }
  double At(std::size_t i, int len) const {
    return best_[i * (max_len_ + 1) + len];
  }

  int max_len_;
  std::vector<std::size_t> order_;
  std::vector<double> best_;
  std::span<const ScoredSentence> scored_;
};

}  // namespace

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kGreedy:
      return "greedy";
    case Strategy::kShorter:
      return "shorter";
    case Strategy::kClosest:
      return "closest";
  }
  return "";
}

std::optional<Strategy> StrategyFromName(std::string_view name) {
  for (Strategy s : {Strategy::kGreedy, Strategy::kShorter, Strategy::kClosest}) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

SummaryCandidate SelectGreedy(std::span<const ScoredSentence> scored,
                              int budget) {
  CheckInput(scored, budget);
  std::vector<std::size_t> order(scored.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scored[a].score != scored[b].score) return scored[a].score > scored[b].score;
    return scored[a].sentence_id < scored[b].sentence_id;
  });
  std::vector<std::size_t> picked;
  int used = 0;
  for (std::size_t i : order) {
    if (used + scored[i].length <= budget) {
      picked.push_back(i);
      used += scored[i].length;
    }
  }
  return Finish(scored, std::move(picked));
}

SummaryCandidate SelectShorter(std::span<const ScoredSentence> scored,
                               int budget) {
  CheckInput(scored, budget);
  ExactLengthTable table(scored, budget);
  int best_len = 0;
  for (int len = 1; len <= budget; ++len) {
    if (table.Best(len) != kNegInf && Better(table.Best(len), table.Best(best_len))) {
      best_len = len;
    }
  }
  return Finish(scored, table.Reconstruct(best_len));
}

SummaryCandidate SelectClosest(std::span<const ScoredSentence> scored,
                               int budget) {
  SummaryCandidate shorter = SelectShorter(scored, budget);
  // |T| - W < W - |S|  <=>  |T| < 2W - |S|.
  const int limit = 2 * budget - shorter.total_tokens - 1;
  if (limit <= budget) return shorter;
  ExactLengthTable table(scored, limit);
  std::optional<SummaryCandidate> best;
  for (int len = budget + 1; len <= limit; ++len) {
    const double v = table.Best(len);
    if (v == kNegInf || !Better(v, shorter.total_score)) continue;
    // Scanning upward, an equal score at a longer length never wins.
    if (!best || Better(v, best->total_score)) {
      best = Finish(scored, table.Reconstruct(len));
    }
  }
  return best ? *best : shorter;
}

SummaryCandidate Select(std::span<const ScoredSentence> scored, int budget,
                        Strategy strategy) {
  switch (strategy) {
    case Strategy::kGreedy:
      return SelectGreedy(scored, budget);
    case Strategy::kShorter:
      return SelectShorter(scored, budget);
    case Strategy::kClosest:
      return SelectClosest(scored, budget);
  }
  return {};
}

SummaryCandidate MakeCandidate(const Document& doc, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  SummaryCandidate c;
  for (int id : ids) c.total_tokens += doc.sentences.at(id).length();
  c.sentence_ids = std::move(ids);
  return c;
}

SummaryCandidate SelectLead(const Document& doc, int budget) {
  if (budget < 1) throw ConfigError("budget must be at least 1");
  std::vector<int> ids;
  int used = 0;
  for (const Sentence& s : doc.sentences) {
    if (used + s.length() > budget) break;
    used += s.length();
    ids.push_back(s.id);
  }
  return MakeCandidate(doc, std::move(ids));
}

SummaryCandidate SelectLongest(const Document& doc, int budget) {
  if (budget < 1) throw ConfigError("budget must be at least 1");
  std::vector<int> order;
  for (const Sentence& s : doc.sentences) order.push_back(s.id);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return doc.sentences[a].length() > doc.sentences[b].length();
  });
  std::vector<int> ids;
  int used = 0;
  for (int id : order) {
    const int len = doc.sentences[id].length();
    if (used + len <= budget) {
      used += len;
      ids.push_back(id);
    }
  }
  return MakeCandidate(doc, std::move(ids));
}

double OracleObjective(const Document& doc, std::span<const int> ids) {
  std::vector<int> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  TokenSentences candidate;
  for (int id : sorted) candidate.push_back(Lowercased(doc.sentences.at(id).tokens));
  TokenSentences reference;
  for (const auto& sentence : doc.reference) reference.push_back(Lowercased(sentence));
  return RougeNRecall(candidate, reference, 1) +
         RougeNRecall(candidate, reference, 2);
}

SummaryCandidate OracleExtract(const Document& doc, int budget) {
  if (budget < 1) throw ConfigError("budget must be at least 1");
  if (doc.reference.empty()) {
    throw Error("document " + doc.id + " has an empty abstract");
  }
  std::vector<int> chosen;
  std::vector<bool> used(doc.sentences.size(), false);
  int tokens = 0;
  double objective = 0.0;

  auto best_addition = [&](auto&& admissible) {
    std::optional<int> best;
    double best_value = objective;
    for (const Sentence& s : doc.sentences) {
      if (used[s.id] || !admissible(s)) continue;
      chosen.push_back(s.id);
      const double v = OracleObjective(doc, chosen);
      chosen.pop_back();
      if (Better(v, best_value)) {
        best = s.id;
        best_value = v;
      }
    }
    return std::make_pair(best, best_value);
  };
  auto take = [&](int id, double value) {
    chosen.push_back(id);
    used[id] = true;
    tokens += doc.sentences[id].length();
    objective = value;
  };

  while (true) {
    auto [best, value] = best_addition(
        [&](const Sentence& s) { return tokens + s.length() <= budget; });
    if (!best) break;
    take(*best, value);
  }
  const int slack = budget - tokens;
  auto [extra, value] = best_addition([&](const Sentence& s) {
    const int over = tokens + s.length() - budget;
    return over > 0 && over < slack;
  });
  if (extra) take(*extra, value);

  SummaryCandidate c = MakeCandidate(doc, chosen);
  c.total_score = objective;
  return c;
}

}  // namespace kvdsum
