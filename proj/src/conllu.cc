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

#include "kvdsum/conllu.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "kvdsum/errors.h"

namespace kvdsum {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

bool ParseInt(std::string_view s, int* out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

void FinishSentence(ParsedSentence* current, std::vector<ParsedSentence>* out,
                    int line) {
  if (current->tokens.empty()) return;
  const int n = static_cast<int>(current->tokens.size());
  for (const ParsedToken& t : current->tokens) {
    if (t.head < 0 || t.head > n) {
      throw ParseError("head " + std::to_string(t.head) +
                           " outside sentence of " + std::to_string(n) +
                           " tokens",
                       line);
    }
  }
  out->push_back(std::move(*current));
  *current = ParsedSentence{};
}

}  // namespace

std::string_view ParsedToken::BaseRelation() const {
  std::string_view rel = deprel;
  return rel.substr(0, rel.find(':'));
}

std::vector<ParsedSentence> ParseConllu(std::string_view text) {
  std::vector<ParsedSentence> sentences;
  ParsedSentence current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      FinishSentence(&current, &sentences, line_no);
      continue;
    }
    if (line.front() == '#') continue;

    std::vector<std::string_view> cols = SplitTabs(line);
    if (cols.size() != 10) {
      throw ParseError("expected 10 columns, found " +
                           std::to_string(cols.size()),
                       line_no);
    }
    if (cols[0].find_first_of("-.") != std::string_view::npos) continue;

    ParsedToken tok;
    if (!ParseInt(cols[0], &tok.index)) {
      throw ParseError("bad token id '" + std::string(cols[0]) + "'", line_no);
    }
    if (tok.index != static_cast<int>(current.tokens.size()) + 1) {
      throw ParseError("token ids must be consecutive from 1", line_no);
    }
    if (!ParseInt(cols[6], &tok.head)) {
      throw ParseError("bad head '" + std::string(cols[6]) + "'", line_no);
    }
    tok.form = std::string(cols[1]);
    tok.lemma = std::string(cols[2] == "_" ? cols[1] : cols[2]);
    std::transform(tok.lemma.begin(), tok.lemma.end(), tok.lemma.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    tok.upos = std::string(cols[3]);
    tok.feats = std::string(cols[5]);
    tok.deprel = std::string(cols[7]);
    current.tokens.push_back(std::move(tok));
    if (nl == text.size()) break;
  }
  FinishSentence(&current, &sentences, line_no);
  return sentences;
}

std::vector<ParsedSentence> ReadConllu(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open parse file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConllu(buf.str());
}

void CheckAlignment(const std::vector<ParsedSentence>& parses, int expected,
                    std::string_view what) {
  if (static_cast<int>(parses.size()) != expected) {
    throw AlignmentError(std::string(what) + ": parse has " +
                         std::to_string(parses.size()) +
                         " sentences, document has " +
                         std::to_string(expected));
  }
}

}  // namespace kvdsum
