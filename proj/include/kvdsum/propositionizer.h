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

#ifndef KVDSUM_PROPOSITIONIZER_H_
#define KVDSUM_PROPOSITIONIZER_H_

#include <map>
#include <string>
#include <vector>

#include "kvdsum/conllu.h"
#include "kvdsum/corpus.h"
#include "kvdsum/proposition.h"

namespace kvdsum {

// Rule-based proposition extraction over Universal Dependencies parses.
//
// Rules fire in token order of their trigger word and number propositions
// consecutively across the whole document:
//   R1  amod (and conjuncts of an amod)   -> modifier(head), unless the
//       modified phrase already refers back to an earlier proposition
//   R2  verb with arguments               -> verb(subj, obj, label:obl...)
//       passive: agent (or the first post-verbal oblique) is arg0 and the
//       passive subject arg1
//   R3  apposition / copula               -> BE(left, right)
//   R4  case-marked nmod                  -> adp(head, dependent); when the
//       adposition is not "of" and the dependent is an earlier proposition,
//       the head noun becomes the predicate: head(adp:#N)
//   R5  an argument whose mention matches an earlier proposition is replaced
//       by a reference to the most recent such proposition
//
// An instance carries the per-document state R5 needs, so use one per document.
class Propositionizer {
 public:
  explicit Propositionizer(const StopLemmas& stop = StopLemmas::Default());

  // Extracts propositions from one sentence and appends them to the context.
  std::vector<Proposition> Extract(const ParsedSentence& sentence,
                                   int sentence_id, SectionKind section);

  const std::vector<Proposition>& propositions() const { return props_; }

 private:
  class SentenceContext;

  std::vector<std::string> Content(const std::vector<std::string>& lemmas) const;
  Argument Resolve(const SentenceContext& ctx, int token, int sentence_id,
                   bool follow_quantifier) const;
  void Add(Proposition p, std::vector<std::string> match_lemmas,
           std::vector<Proposition>* out);

  const StopLemmas& stop_;
  std::vector<Proposition> props_;
  // Lemmas an argument mention must equal (after Content()) to refer back to
  // the proposition with the same index in props_.
  std::vector<std::vector<std::string>> match_lemmas_;
  std::map<std::string, std::vector<std::string>> aliases_;
};

// Runs the propositionizer over a whole document. Throws AlignmentError when
// the parse does not have one sentence per document sentence.
std::vector<Proposition> ExtractDocumentPropositions(
    const Document& doc, const std::vector<ParsedSentence>& parses);

}  // namespace kvdsum

#endif  // KVDSUM_PROPOSITIONIZER_H_
