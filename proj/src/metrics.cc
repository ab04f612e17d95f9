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

#include "kvdsum/metrics.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "kvdsum/errors.h"

namespace kvdsum {
namespace {

using NGram = std::vector<std::string>;

std::map<NGram, int> CountNGrams(const TokenSentences& text, int n) {
  std::map<NGram, int> counts;
  for (const auto& sentence : text) {
    for (std::size_t i = 0; i + n <= sentence.size(); ++i) {
      ++counts[NGram(sentence.begin() + i, sentence.begin() + i + n)];
    }
  }
  return counts;
}

void CheckReference(const TokenSentences& reference) {
  for (const auto& s : reference) {
    if (!s.empty()) return;
  }
  throw Error("empty reference summary");
}

// Positions in `ref` that take part in one LCS of (ref, cand).
std::vector<std::size_t> LcsHits(const std::vector<std::string>& ref,
                                 const std::vector<std::string>& cand) {
  const std::size_t m = ref.size();
  const std::size_t n = cand.size();
  std::vector<std::vector<int>> t(m + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      t[i][j] = ref[i - 1] == cand[j - 1] ? t[i - 1][j - 1] + 1
                                          : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  std::vector<std::size_t> hits;
  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 && j > 0) {
    if (ref[i - 1] == cand[j - 1]) {
      hits.push_back(i - 1);
      --i;
      --j;
    } else if (t[i - 1][j] >= t[i][j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(hits.begin(), hits.end());
  return hits;
}

}  // namespace

std::vector<std::string> Lowercased(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) {
    std::string s = t.surface;
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    out.push_back(std::move(s));
  }
  return out;
}

double RougeNRecall(const TokenSentences& candidate,
                    const TokenSentences& reference, int n) {
  if (n < 1) throw Error("n-gram order must be positive");
  CheckReference(reference);
  const std::map<NGram, int> ref = CountNGrams(reference, n);
  int total = 0;
  for (const auto& [gram, count] : ref) total += count;
  if (total == 0) return 0.0;
  const std::map<NGram, int> cand = CountNGrams(candidate, n);
  int hits = 0;
  for (const auto& [gram, count] : ref) {
    auto it = cand.find(gram);
    if (it != cand.end()) hits += std::min(count, it->second);
  }
  return static_cast<double>(hits) / total;
}

double RougeLRecall(const TokenSentences& candidate,
                    const TokenSentences& reference) {
  CheckReference(reference);
  std::map<std::string, int> budget;  // candidate tokens still unclaimed
  for (const auto& s : candidate) {
    for (const auto& tok : s) ++budget[tok];
  }
  int hits = 0;
  int total = 0;
  for (const auto& ref : reference) {
    total += static_cast<int>(ref.size());
    std::vector<bool> in_union(ref.size(), false);
    for (const auto& cand : candidate) {
      for (std::size_t pos : LcsHits(ref, cand)) in_union[pos] = true;
    }
    for (std::size_t pos = 0; pos < ref.size(); ++pos) {
      if (!in_union[pos]) continue;
      int& left = budget[ref[pos]];
      if (left > 0) {
        --left;
        ++hits;
      }
    }
  }
  return static_cast<double>(hits) / total;
}

std::array<double, 3> SectionProportions(const SummaryCandidate& summary,
                                         const Document& doc) {
  std::array<double, 3> share{0.0, 0.0, 0.0};
  if (summary.empty()) return share;
  for (int id : summary.sentence_ids) {
    share[static_cast<int>(doc.sentences.at(id).section)] += 1.0;
  }
  for (double& s : share) s = 100.0 * s / summary.sentence_ids.size();
  return share;
}

double QDiff(const SummaryCandidate& candidate, const SummaryCandidate& oracle,
             const Document& doc) {
  if (candidate.empty() || oracle.empty()) {
    throw Error("q_diff needs two non-empty summaries");
  }
  const auto q_hat = SectionProportions(candidate, doc);
  const auto q = SectionProportions(oracle, doc);
  double d = 0.0;
  for (int y = 0; y < 3; ++y) d += std::abs(q[y] - q_hat[y]);
  return d;
}

LengthStats ComputeLengthStats(std::span<const int> lengths) {
  if (lengths.empty()) throw Error("length statistics of an empty list");
  LengthStats st;
  for (int l : lengths) st.mean += l;
  st.mean /= lengths.size();
  double var = 0.0;
  for (int l : lengths) var += (l - st.mean) * (l - st.mean);
  st.stddev = std::sqrt(var / lengths.size());
  return st;
}

LengthStats ComputeLengthStats(std::span<const SummaryCandidate> summaries) {
  std::vector<int> lengths;
  lengths.reserve(summaries.size());
  for (const SummaryCandidate& s : summaries) lengths.push_back(s.total_tokens);
  return ComputeLengthStats(lengths);
}

EvalReport Evaluate(const Document& doc, const SummaryCandidate& summary,
                    const SummaryCandidate& oracle) {
  TokenSentences cand;
  for (int id : summary.sentence_ids) {
    cand.push_back(Lowercased(doc.sentences.at(id).tokens));
  }
  TokenSentences ref;
  for (const auto& s : doc.reference) ref.push_back(Lowercased(s));
  EvalReport r;
  r.r1 = RougeNRecall(cand, ref, 1);
  r.r2 = RougeNRecall(cand, ref, 2);
  r.rl = RougeLRecall(cand, ref);
  if (!summary.empty() && !oracle.empty()) {
    r.q_diff = QDiff(summary, oracle, doc);
  }
  r.length = summary.total_tokens;
  return r;
}

}  // namespace kvdsum
