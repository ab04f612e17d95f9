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

#ifndef KVDSUM_CORPUS_H_
#define KVDSUM_CORPUS_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kvdsum {

enum class SectionKind { kIntroduction = 0, kDiscussion = 1, kConclusion = 2 };

inline constexpr std::array<SectionKind, 3> kAllSections = {
    SectionKind::kIntroduction, SectionKind::kDiscussion,
    SectionKind::kConclusion};

// "introduction", "discussion" or "conclusion".
std::string_view SectionName(SectionKind kind);
std::optional<SectionKind> SectionFromName(std::string_view name);

// Maps a free-form section heading onto one of the three kinds by
// case-insensitive keyword match ("introduc", "discussion", "conclu", tried in
// that order). Headings matching none of them are dropped by the loader.
std::optional<SectionKind> ClassifySection(std::string_view heading);

struct Token {
  std::string surface;
  std::string lemma;  // lowercased
};

struct Sentence {
  int id = 0;  // 0-based position in the filtered document
  SectionKind section = SectionKind::kIntroduction;
  std::vector<Token> tokens;

  int length() const { return static_cast<int>(tokens.size()); }
  std::string Text() const;
};

// A contiguous run of sentences [begin, end) that came from one heading.
struct SectionSpan {
  SectionKind kind;
  int begin = 0;
  int end = 0;
};

struct Document {
  std::string id;
  std::vector<SectionSpan> sections;
  std::vector<Sentence> sentences;
  std::vector<std::vector<Token>> reference;  // abstract, one entry per sentence

  int TotalTokens() const;
};

struct SectionRatios {
  double introduction = 0.0;
  double discussion = 0.0;
  double conclusion = 0.0;

  double operator[](SectionKind kind) const;
};

enum class RatioMode { kFixed, kPerDocument };

// Fixed mode returns the corpus-level proportions (0.33, 0.53, 0.14);
// per-document mode returns the share of the document's sentences that fall in
// each section.
SectionRatios ComputeSectionRatios(const Document& doc, RatioMode mode);

struct CorpusLoadResult {
  std::vector<Document> documents;
  std::vector<std::string> warnings;
};

// Parses one JSONL record. Returns nullopt (and appends a warning) when the
// record has none of the three retained sections. Throws ParseError on schema
// violations; `line` is only used for messages.
std::optional<Document> ParseDocument(std::string_view json_line, int line,
                                      std::vector<std::string>* warnings);

// Reads a corpus JSONL file, one document per non-blank line.
// Throws IoError if the file cannot be opened, ParseError on bad lines.
CorpusLoadResult LoadCorpus(const std::filesystem::path& path);

}  // namespace kvdsum

#endif  // KVDSUM_CORPUS_H_
