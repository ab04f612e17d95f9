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

#include "kvdsum/propositionizer.h"

#include <gtest/gtest.h>

#include <sstream>

#include "kvdsum/errors.h"
#include "test_util.h"

namespace kvdsum {
namespace {

// "form/lemma/UPOS/head/deprel" per token, whitespace separated.
ParsedSentence Parse(const std::string& spec) {
  ParsedSentence s;
  std::istringstream in(spec);
  std::string item;
  while (in >> item) {
    std::vector<std::string> f;
    std::stringstream part(item);
    std::string x;
    while (std::getline(part, x, '/')) f.push_back(x);
    ParsedToken t;
    t.index = static_cast<int>(s.tokens.size()) + 1;
    t.form = f.at(0);
    t.lemma = f.at(1);
    t.upos = f.at(2);
    t.head = std::stoi(f.at(3));
    t.deprel = f.at(4);
    s.tokens.push_back(t);
  }
  return s;
}

std::vector<std::string> Texts(const std::vector<Proposition>& props) {
  std::vector<std::string> out;
  for (const Proposition& p : props) out.push_back(p.ToString());
  return out;
}

Document WorkedExampleDoc() {
  return LoadCorpus(testing::Fixture("table1.jsonl")).documents.at(0);
}

TEST(WorkedExamplePropositionsTest, MatchesHandTypedFixture) {
  const auto props = ExtractDocumentPropositions(
      WorkedExampleDoc(), ReadConllu(testing::Fixture("table1.conllu")));
  const auto expected = PropositionsFromJson(
      testing::ReadAll(testing::Fixture("table1.props.json")));
  ASSERT_EQ(props.size(), expected.size());
  for (std::size_t i = 0; i < props.size(); ++i) {
    EXPECT_EQ(props[i].ToString(), expected[i].ToString());
    EXPECT_EQ(props[i].kind, expected[i].kind) << props[i].ToString();
    EXPECT_EQ(props[i].sentence_id, expected[i].sentence_id);
    EXPECT_EQ(props[i].predicate, expected[i].predicate);
    EXPECT_EQ(props[i].args, expected[i].args) << props[i].ToString();
  }
}

TEST(WorkedExamplePropositionsTest, MatchesHandTypedList) {
  // As printed, with spacing normalised and the two spelling slips fixed.
  const std::vector<std::string> printed = {
      "1: healthy(people)",
      "2: reactive(species)",
      "3: oxidant(species)",
      "4: are controlled(antioxidants, species, in:people)",
      "5: of(a number, antioxidants)",
      "6: enzymatic(antioxidants)",
      "7: nonenzymatic(antioxidants)",
      "8: with(patients, cystic fibrosis)",
      "9: BE(cystic fibrosis, cf)",
      "10: of(deficiency, #7)",
      "11: is linked(malabsortion, #10, in:#8)",
      "12: of(malabsortion, vitamins)",
      "13: lipid-soluble(vitamins)",
      "14: pulmonary(inflammation)",
      "15: inflammation(in:#8)",
      "16: contributes(#15, to:depletion)",
      "17: of(depletion, antioxidants)",
  };
  const auto props = ExtractDocumentPropositions(
      WorkedExampleDoc(), ReadConllu(testing::Fixture("table1.conllu")));
  EXPECT_EQ(Texts(props), printed);
  // Sentence boundaries: 1-7, 8-13, 14-17.
  for (const Proposition& p : props) {
    EXPECT_EQ(p.sentence_id, p.id <= 7 ? 0 : p.id <= 13 ? 1 : 2) << p.id;
  }
}

TEST(PropositionizerTest, ActiveClauseWithOblique) {
  Propositionizer pz;
  auto props = pz.Extract(
      Parse("Enzymes/enzyme/NOUN/2/nsubj degrade/degrade/VERB/0/root "
            "toxins/toxin/NOUN/2/obj in/in/ADP/5/case cells/cell/NOUN/2/obl "
            ";/;/PUNCT/2/punct"),
      0, SectionKind::kIntroduction);
  EXPECT_EQ(Texts(props),
            std::vector<std::string>{"1: degrade(Enzymes, toxins, in:cells)"});
  EXPECT_EQ(props[0].kind, PropKind::kPredication);
}

TEST(PropositionizerTest, PassiveAgentComesFirst) {
  Propositionizer pz;
  auto props = pz.Extract(
      Parse("Toxins/toxin/NOUN/3/nsubj:pass are/be/AUX/3/aux:pass "
            "degraded/degrade/VERB/0/root by/by/ADP/5/case "
            "enzymes/enzyme/NOUN/3/obl:agent"),
      0, SectionKind::kIntroduction);
  EXPECT_EQ(Texts(props),
            std::vector<std::string>{"1: are degraded(enzymes, Toxins)"});
}

TEST(PropositionizerTest, ConjoinedVerbInheritsSubject) {
  Propositionizer pz;
  auto props = pz.Extract(
      Parse("Cells/cell/NOUN/2/nsubj grow/grow/VERB/0/root and/and/CCONJ/4/cc "
            "divide/divide/VERB/2/conj"),
      0, SectionKind::kDiscussion);
  EXPECT_EQ(Texts(props),
            (std::vector<std::string>{"1: grow(Cells)", "2: divide(Cells)"}));
  EXPECT_EQ(props[1].section, SectionKind::kDiscussion);
}

TEST(PropositionizerTest, CopulaGivesIdentity) {
  Propositionizer pz;
  auto props = pz.Extract(
      Parse("Fibrosis/fibrosis/NOUN/4/nsubj is/be/AUX/4/cop a/a/DET/4/det "
            "disease/disease/NOUN/0/root"),
      0, SectionKind::kIntroduction);
  ASSERT_EQ(props.size(), 1u);
  EXPECT_EQ(props[0].ToString(), "1: BE(Fibrosis, a disease)");
  EXPECT_EQ(props[0].kind, PropKind::kIdentity);
}

TEST(PropositionizerTest, VerbWithoutArgumentsIsDropped) {
  Propositionizer pz;
  auto props = pz.Extract(Parse("Stop/stop/VERB/0/root !/!/PUNCT/1/punct"), 0,
                          SectionKind::kIntroduction);
  EXPECT_TRUE(props.empty());
}

TEST(PropositionizerTest, LaterMentionBecomesReference) {
  Propositionizer pz;
  pz.Extract(Parse("loss/loss/NOUN/0/root of/of/ADP/3/case "
                   "function/function/NOUN/1/nmod"),
             0, SectionKind::kIntroduction);
  auto props = pz.Extract(
      Parse("It/it/PRON/2/nsubj causes/cause/VERB/0/root loss/loss/NOUN/2/obj "
            "of/of/ADP/5/case function/function/NOUN/3/nmod"),
      1, SectionKind::kIntroduction);
  // The repeated "of" relation refers back to proposition 1 via the verb.
  ASSERT_FALSE(props.empty());
  bool refers = false;
  for (const Proposition& p : props) refers = refers || p.References(1);
  EXPECT_TRUE(refers) << ::testing::PrintToString(Texts(props));
  EXPECT_EQ(pz.propositions().size(), 1u + props.size());
}

TEST(ExtractDocumentTest, MisalignedParseIsRejected) {
  auto parses = ReadConllu(testing::Fixture("table1.conllu"));
  parses.pop_back();
  EXPECT_THROW(ExtractDocumentPropositions(WorkedExampleDoc(), parses), AlignmentError);
}

}  // namespace
}  // namespace kvdsum
