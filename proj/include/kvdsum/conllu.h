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

#ifndef KVDSUM_CONLLU_H_
#define KVDSUM_CONLLU_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kvdsum {

struct ParsedToken {
  int index = 0;  // 1-based position in the sentence
  std::string form;
  std::string lemma;  // lowercased
  std::string upos;
  std::string feats;
  int head = 0;  // 0 for the root
  std::string deprel;

  // "nsubj:pass" -> "nsubj".
  std::string_view BaseRelation() const;
};

struct ParsedSentence {
  std::vector<ParsedToken> tokens;  // tokens[i].index == i + 1
};

// Parses CoNLL-U text. Multiword-token ranges (1-2) and empty nodes (1.1) are
// skipped. Throws ParseError naming the offending line when a token line does
// not have exactly ten tab-separated columns or carries a bad id/head.
std::vector<ParsedSentence> ParseConllu(std::string_view text);

// Reads a file via ParseConllu. Throws IoError if it cannot be opened.
std::vector<ParsedSentence> ReadConllu(const std::filesystem::path& path);

// Throws AlignmentError unless the parse has exactly `expected` sentences.
void CheckAlignment(const std::vector<ParsedSentence>& parses, int expected,
                    std::string_view what);

}  // namespace kvdsum

#endif  // KVDSUM_CONLLU_H_
