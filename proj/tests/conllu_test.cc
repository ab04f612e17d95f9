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

#include <gtest/gtest.h>

#include "kvdsum/errors.h"
#include "test_util.h"

namespace kvdsum {
namespace {

std::string Row(const std::string& cols) {
  std::string out;
  for (char c : cols) out += c == '|' ? '\t' : c;
  return out + "\n";
}

TEST(ParseConlluTest, ReadsTokensAndSentences) {
  const std::string text =
      "# sent_id = 1\n" + Row("1|Cells|cell|NOUN|_|Number=Plur|2|nsubj|_|_") +
      Row("2|grow|grow|VERB|_|_|0|root|_|_") + "\n" +
      Row("1|It|_|PRON|_|_|2|nsubj:pass|_|_") +
      Row("2|stopped|stop|VERB|_|_|0|root|_|_");
  auto sents = ParseConllu(text);
  ASSERT_EQ(sents.size(), 2u);
  ASSERT_EQ(sents[0].tokens.size(), 2u);
  EXPECT_EQ(sents[0].tokens[0].form, "Cells");
  EXPECT_EQ(sents[0].tokens[0].head, 2);
  EXPECT_EQ(sents[0].tokens[0].feats, "Number=Plur");
  EXPECT_EQ(sents[1].tokens[0].lemma, "it");  // "_" falls back to the form
  EXPECT_EQ(sents[1].tokens[0].deprel, "nsubj:pass");
  EXPECT_EQ(sents[1].tokens[0].BaseRelation(), "nsubj");
  EXPECT_EQ(sents[1].tokens[1].index, 2);
}

TEST(ParseConlluTest, SkipsRangesAndEmptyNodes) {
  const std::string text = Row("1-2|don't|_|_|_|_|_|_|_|_") +
                           Row("1|do|do|AUX|_|_|3|aux|_|_") +
                           Row("2|n't|not|PART|_|_|3|advmod|_|_") +
                           Row("2.1|x|x|X|_|_|_|_|_|_") +
                           Row("3|go|go|VERB|_|_|0|root|_|_") + "\n";
  auto sents = ParseConllu(text);
  ASSERT_EQ(sents.size(), 1u);
  EXPECT_EQ(sents[0].tokens.size(), 3u);
}

TEST(ParseConlluTest, WrongColumnCountNamesTheLine) {
  const std::string text = Row("1|a|a|DET|_|_|2|det|_|_") + "2\tb\tb\tNOUN\t_\t_\t0\troot\t_\n";
  try {
    ParseConllu(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(ParseConlluTest, RejectsBadIdsAndHeads) {
  EXPECT_THROW(ParseConllu(Row("2|a|a|X|_|_|0|root|_|_")), ParseError);
  EXPECT_THROW(ParseConllu(Row("1|a|a|X|_|_|5|dep|_|_")), ParseError);
  EXPECT_THROW(ParseConllu(Row("1|a|a|X|_|_|x|dep|_|_")), ParseError);
}

TEST(ParseConlluTest, EmptyInput) { EXPECT_TRUE(ParseConllu("").empty()); }

TEST(ReadConlluTest, FixtureAndAlignment) {
  auto parses = ReadConllu(testing::Fixture("table1.conllu"));
  ASSERT_EQ(parses.size(), 3u);
  EXPECT_NO_THROW(CheckAlignment(parses, 3, "table1"));
  EXPECT_THROW(CheckAlignment(parses, 4, "table1"), AlignmentError);
  EXPECT_THROW(ReadConllu("/nonexistent.conllu"), IoError);
}

}  // namespace
}  // namespace kvdsum
