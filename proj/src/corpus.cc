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

#include "kvdsum/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "json.hpp"
#include "kvdsum/errors.h"

namespace kvdsum {
namespace {

using nlohmann::json;

std::string ToLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

[[noreturn]] void SchemaError(const std::string& what, int line) {
  throw ParseError("corpus schema: " + what, line);
}

std::vector<Token> ReadTokens(const json& words, const json* lemmas, int line) {
  if (!words.is_array()) SchemaError("sentence must be an array of tokens", line);
  if (lemmas != nullptr &&
      (!lemmas->is_array() || lemmas->size() != words.size())) {
    SchemaError("lemma array does not mirror its sentence", line);
  }
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!words[i].is_string() || words[i].get_ref<const std::string&>().empty()) {
      SchemaError("tokens must be non-empty strings", line);
    }
    Token tok;
    tok.surface = words[i].get<std::string>();
    if (lemmas != nullptr) {
      const json& l = (*lemmas)[i];
      if (!l.is_string() || l.get_ref<const std::string&>().empty()) {
        SchemaError("lemmas must be non-empty strings", line);
      }
      tok.lemma = ToLower(l.get<std::string>());
    } else {
      tok.lemma = ToLower(tok.surface);
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

}  // namespace

std::string_view SectionName(SectionKind kind) {
  switch (kind) {
    case SectionKind::kIntroduction:
      return "introduction";
    case SectionKind::kDiscussion:
      return "discussion";
    case SectionKind::kConclusion:
      return "conclusion";
  }
  return "";
}

std::optional<SectionKind> SectionFromName(std::string_view name) {
  for (SectionKind k : kAllSections) {
    if (SectionName(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<SectionKind> ClassifySection(std::string_view heading) {
  const std::string lower = ToLower(heading);
  if (lower.find("introduc") != std::string::npos) {
    return SectionKind::kIntroduction;
  }
  if (lower.find("discussion") != std::string::npos) {
    return SectionKind::kDiscussion;
  }
  if (lower.find("conclu") != std::string::npos) {
    return SectionKind::kConclusion;
  }
  return std::nullopt;
}

std::string Sentence::Text() const {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

int Document::TotalTokens() const {
  int total = 0;
  for (const Sentence& s : sentences) total += s.length();
  return total;
}

double SectionRatios::operator[](SectionKind kind) const {
  switch (kind) {
    case SectionKind::kIntroduction:
      return introduction;
    case SectionKind::kDiscussion:
      return discussion;
    case SectionKind::kConclusion:
      return conclusion;
  }
  return 0.0;
}

SectionRatios ComputeSectionRatios(const Document& doc, RatioMode mode) {
  if (mode == RatioMode::kFixed) return {0.33, 0.53, 0.14};
  SectionRatios r;
  if (doc.sentences.empty()) return r;
  std::array<int, 3> counts{};
  for (const Sentence& s : doc.sentences) {
    ++counts[static_cast<int>(s.section)];
  }
  const double total = static_cast<double>(doc.sentences.size());
  r.introduction = counts[0] / total;
  r.discussion = counts[1] / total;
  r.conclusion = counts[2] / total;
  return r;
}

std::optional<Document> ParseDocument(std::string_view json_line, int line,
                                      std::vector<std::string>* warnings) {
  json record;
  try {
    record = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line);
  }
  if (!record.is_object()) SchemaError("record must be an object", line);
  if (!record.contains("article_id") || !record["article_id"].is_string()) {
    SchemaError("missing string field \"article_id\"", line);
  }
  if (!record.contains("sections") || !record["sections"].is_array()) {
    SchemaError("missing array field \"sections\"", line);
  }
  if (!record.contains("abstract") || !record["abstract"].is_array()) {
    SchemaError("missing array field \"abstract\"", line);
  }

  Document doc;
  doc.id = record["article_id"].get<std::string>();
  for (const json& section : record["sections"]) {
    if (!section.is_object() || !section.contains("name") ||
        !section["name"].is_string() || !section.contains("sentences") ||
        !section["sentences"].is_array()) {
      SchemaError("section needs \"name\" and \"sentences\"", line);
    }
    const json* lemmas = nullptr;
    if (section.contains("lemmas")) {
      lemmas = &section["lemmas"];
      if (!lemmas->is_array() || lemmas->size() != section["sentences"].size()) {
        SchemaError("\"lemmas\" does not mirror \"sentences\"", line);
      }
    }
    std::optional<SectionKind> kind =
        ClassifySection(section["name"].get<std::string>());
    if (!kind) continue;
    SectionSpan span{*kind, static_cast<int>(doc.sentences.size()), 0};
    const json& sentences = section["sentences"];
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      Sentence s;
      s.id = static_cast<int>(doc.sentences.size());
      s.section = *kind;
      s.tokens = ReadTokens(sentences[i], lemmas ? &(*lemmas)[i] : nullptr, line);
      if (s.tokens.empty()) SchemaError("empty sentence", line);
      doc.sentences.push_back(std::move(s));
    }
    span.end = static_cast<int>(doc.sentences.size());
    if (span.end > span.begin) doc.sections.push_back(span);
  }
  for (const json& sent : record["abstract"]) {
    std::vector<Token> tokens = ReadTokens(sent, nullptr, line);
    if (!tokens.empty()) doc.reference.push_back(std::move(tokens));
  }

  if (doc.sections.empty()) {
    if (warnings != nullptr) {
      warnings->push_back("line " + std::to_string(line) + ": article " +
                          doc.id +
                          " has no introduction, discussion or conclusion; "
                          "skipped");
    }
    return std::nullopt;
  }
  return doc;
}

CorpusLoadResult LoadCorpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus " + path.string());
  CorpusLoadResult result;
  std::string buf;
  int line = 0;
  while (std::getline(in, buf)) {
    ++line;
    if (buf.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::optional<Document> doc = ParseDocument(buf, line, &result.warnings);
    if (doc) result.documents.push_back(std::move(*doc));
  }
  return result;
}

}  // namespace kvdsum
