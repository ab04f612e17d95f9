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

#ifndef KVDSUM_PROPOSITION_H_
#define KVDSUM_PROPOSITION_H_

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "kvdsum/corpus.h"

namespace kvdsum {

// A run of words from the sentence. `lemmas` is parallel to `words`.
struct WordSpan {
  std::vector<std::string> words;
  std::vector<std::string> lemmas;

  std::string Text() const;
  bool operator==(const WordSpan&) const = default;
};

// Another proposition used as an argument ("#7").
struct PropRef {
  int target = 0;
  bool operator==(const PropRef&) const = default;
};

// An argument slot. A non-empty label marks an oblique ("in:people").
struct Argument {
  std::string label;
  std::variant<WordSpan, PropRef> value;

  bool IsRef() const { return std::holds_alternative<PropRef>(value); }
  const WordSpan* span() const { return std::get_if<WordSpan>(&value); }
  const PropRef* ref() const { return std::get_if<PropRef>(&value); }
  std::string ToString() const;
  bool operator==(const Argument&) const = default;
};

// Which extraction rule produced the proposition. Modifier and kNominal
// predicates are themselves content words and take part in argument overlap.
enum class PropKind {
  kModifier,    // healthy(people)
  kPredication, // are controlled(antioxidants, species, in:people)
  kIdentity,    // BE(cystic fibrosis, cf)
  kRelation,    // of(a number, antioxidants)
  kNominal,     // inflammation(in:#8)
};

std::string_view PropKindName(PropKind kind);
PropKind PropKindFromName(std::string_view name);

struct Proposition {
  int id = 0;  // 1-based, global extraction order within a document
  PropKind kind = PropKind::kPredication;
  WordSpan predicate;
  std::vector<Argument> args;
  int sentence_id = 0;
  SectionKind section = SectionKind::kIntroduction;

  bool IsUnaryModifier() const { return kind == PropKind::kModifier; }
  bool References(int target) const;
  // "4: are controlled(antioxidants, species, in:people)".
  std::string ToString() const;
};

// Stop lemmas excluded from argument overlap: articles, auxiliaries,
// pronouns and frequent function words.
class StopLemmas {
 public:
  StopLemmas();  // built-in list
  explicit StopLemmas(std::vector<std::string> lemmas);

  static const StopLemmas& Default();
  static StopLemmas FromFile(const std::string& path);

  bool Contains(std::string_view lemma) const;
  std::vector<std::string> Sorted() const;

 private:
  std::unordered_set<std::string> lemmas_;
};

// Content lemmas a proposition exposes for overlap: lemmas of word-span
// arguments (labeled or not) plus the predicate for modifier and nominal
// propositions, minus stop lemmas.
std::set<std::string> OverlapLemmas(const Proposition& p,
                                    const StopLemmas& stop = StopLemmas::Default());

// True when one proposition uses the other as an argument, or when their
// overlap lemmas intersect.
bool SharesArgument(const Proposition& p, const Proposition& q,
                    const StopLemmas& stop = StopLemmas::Default());

// Content identity used to count repeated propositions. Arguments are folded
// into one sorted multiset, so of(a, b) and of(b, a) collide.
struct PropKey {
  std::string predicate;
  std::vector<std::string> fingerprint;  // sorted

  bool operator==(const PropKey&) const = default;
  auto operator<=>(const PropKey&) const = default;
};

// `props` must contain every proposition referenced (directly or
// transitively) by `p`; lookup is by id.
PropKey MakePropKey(const Proposition& p, std::span<const Proposition> props);

// Serialisation used by fixtures and trace dumps.
std::string PropositionsToJson(std::span<const Proposition> props);
std::vector<Proposition> PropositionsFromJson(std::string_view text);

}  // namespace kvdsum

#endif  // KVDSUM_PROPOSITION_H_
