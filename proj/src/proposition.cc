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

#include "kvdsum/proposition.h"

#include <algorithm>
#include <fstream>
#include <functional>

#include "json.hpp"
#include "kvdsum/errors.h"

namespace kvdsum {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Keep in sync with fixtures/stop_lemmas.txt (checked by proposition_test).
constexpr const char* kBuiltinStopLemmas[] = {
    // articles
    "a", "an", "the",
    // auxiliaries
    "be", "am", "is", "are", "was", "were", "been", "being", "have", "has",
    "had", "having", "do", "does", "did", "will", "would", "shall", "should",
    "can", "could", "may", "might", "must",
    // pronouns
    "i", "me", "my", "we", "us", "our", "you", "your", "he", "him", "his",
    "she", "her", "it", "its", "they", "them", "their", "this", "that",
    "these", "those", "which", "who", "whom", "what", "itself", "themselves",
    // frequent function words
    "of", "and", "to", "in", "for", "on", "with", "as", "by", "at", "from",
    "or", "but", "not", "no", "than", "so", "if", "about", "into", "also",
    "there", "such", "then", "between",
};

const Proposition* FindById(std::span<const Proposition> props, int id) {
  if (id >= 1 && id <= static_cast<int>(props.size()) &&
      props[id - 1].id == id) {
    return &props[id - 1];
  }
  for (const Proposition& p : props) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::string Join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& s : parts) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

void AddKeyParts(const Proposition& p, std::span<const Proposition> props,
                 std::vector<std::string>* out) {
  for (const Argument& a : p.args) {
    if (!a.label.empty()) out->push_back("@" + a.label);
    if (const WordSpan* s = a.span()) {
      out->insert(out->end(), s->lemmas.begin(), s->lemmas.end());
    } else if (const PropRef* r = a.ref()) {
      const Proposition* target = FindById(props, r->target);
      if (target == nullptr || target->id >= p.id) {
        throw Error("proposition " + std::to_string(p.id) +
                    " references unknown or later proposition " +
                    std::to_string(r->target));
      }
      out->insert(out->end(), target->predicate.lemmas.begin(),
                  target->predicate.lemmas.end());
      AddKeyParts(*target, props, out);
    }
  }
}

ordered_json SpanToJson(const WordSpan& s) {
  return ordered_json{{"words", s.words}, {"lemmas", s.lemmas}};
}

WordSpan SpanFromJson(const json& j) {
  WordSpan s;
  s.words = j.at("words").get<std::vector<std::string>>();
  s.lemmas = j.at("lemmas").get<std::vector<std::string>>();
  if (s.words.size() != s.lemmas.size() || s.words.empty()) {
    throw ParseError("span needs parallel non-empty words/lemmas", 0);
  }
  return s;
}

}  // namespace

std::string WordSpan::Text() const { return Join(words); }

std::string Argument::ToString() const {
  std::string out = label.empty() ? "" : label + ":";
  if (const WordSpan* s = span()) {
    out += s->Text();
  } else {
    out += "#" + std::to_string(ref()->target);
  }
  return out;
}

std::string_view PropKindName(PropKind kind) {
  switch (kind) {
    case PropKind::kModifier:
      return "modifier";
    case PropKind::kPredication:
      return "predication";
    case PropKind::kIdentity:
      return "identity";
    case PropKind::kRelation:
      return "relation";
    case PropKind::kNominal:
      return "nominal";
  }
  return "";
}

PropKind PropKindFromName(std::string_view name) {
  for (PropKind k : {PropKind::kModifier, PropKind::kPredication,
                     PropKind::kIdentity, PropKind::kRelation,
                     PropKind::kNominal}) {
    if (PropKindName(k) == name) return k;
  }
  throw ParseError("unknown proposition kind '" + std::string(name) + "'", 0);
}

bool Proposition::References(int target) const {
  return std::any_of(args.begin(), args.end(), [target](const Argument& a) {
    return a.ref() != nullptr && a.ref()->target == target;
  });
}

std::string Proposition::ToString() const {
  std::string out = std::to_string(id) + ": " + predicate.Text() + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += args[i].ToString();
  }
  return out + ")";
}

StopLemmas::StopLemmas()
    : lemmas_(std::begin(kBuiltinStopLemmas), std::end(kBuiltinStopLemmas)) {}

StopLemmas::StopLemmas(std::vector<std::string> lemmas)
    : lemmas_(lemmas.begin(), lemmas.end()) {}

const StopLemmas& StopLemmas::Default() {
  static const StopLemmas* stop = new StopLemmas();
  return *stop;
}

StopLemmas StopLemmas::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stop list " + path);
  std::vector<std::string> lemmas;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lemmas.push_back(line);
  }
  return StopLemmas(std::move(lemmas));
}

bool StopLemmas::Contains(std::string_view lemma) const {
  return lemmas_.count(std::string(lemma)) > 0;
}

std::vector<std::string> StopLemmas::Sorted() const {
  std::vector<std::string> out(lemmas_.begin(), lemmas_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::string> OverlapLemmas(const Proposition& p,
                                    const StopLemmas& stop) {
  std::set<std::string> out;
  auto add = [&](const std::vector<std::string>& lemmas) {
    for (const std::string& l : lemmas) {
      if (!stop.Contains(l)) out.insert(l);
    }
  };
  if (p.kind == PropKind::kModifier || p.kind == PropKind::kNominal) {
    add(p.predicate.lemmas);
  }
  for (const Argument& a : p.args) {
    if (const WordSpan* s = a.span()) add(s->lemmas);
  }
  return out;
}

bool SharesArgument(const Proposition& p, const Proposition& q,
                    const StopLemmas& stop) {
  if (p.References(q.id) || q.References(p.id)) return true;
  const std::set<std::string> a = OverlapLemmas(p, stop);
  const std::set<std::string> b = OverlapLemmas(q, stop);
  auto it = a.begin();
  auto jt = b.begin();
  while (it != a.end() && jt != b.end()) {
    if (*it == *jt) return true;
    if (*it < *jt) {
      ++it;
    } else {
      ++jt;
    }
  }
  return false;
}

PropKey MakePropKey(const Proposition& p, std::span<const Proposition> props) {
  PropKey key;
  key.predicate = Join(p.predicate.lemmas);
  AddKeyParts(p, props, &key.fingerprint);
  std::sort(key.fingerprint.begin(), key.fingerprint.end());
  return key;
}

std::string PropositionsToJson(std::span<const Proposition> props) {
  ordered_json out = ordered_json::array();
  for (const Proposition& p : props) {
    ordered_json args = ordered_json::array();
    for (const Argument& a : p.args) {
      ordered_json arg{{"label", a.label}};
      if (const WordSpan* s = a.span()) {
        arg["span"] = SpanToJson(*s);
      } else {
        arg["ref"] = a.ref()->target;
      }
      args.push_back(std::move(arg));
    }
    out.push_back(ordered_json{{"id", p.id},
                               {"kind", PropKindName(p.kind)},
                               {"sentence_id", p.sentence_id},
                               {"section", SectionName(p.section)},
                               {"predicate", SpanToJson(p.predicate)},
                               {"args", std::move(args)},
                               {"text", p.ToString()}});
  }
  return out.dump(2) + "\n";
}

std::vector<Proposition> PropositionsFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed proposition JSON: ") + e.what(), 0);
  }
  std::vector<Proposition> props;
  try {
    for (const json& j : doc) {
      Proposition p;
      p.id = j.at("id").get<int>();
      p.kind = PropKindFromName(j.at("kind").get<std::string>());
      p.sentence_id = j.at("sentence_id").get<int>();
      auto section = SectionFromName(j.at("section").get<std::string>());
      if (!section) throw ParseError("unknown section", 0);
      p.section = *section;
      p.predicate = SpanFromJson(j.at("predicate"));
      for (const json& a : j.at("args")) {
        Argument arg;
        arg.label = a.value("label", "");
        if (a.contains("ref")) {
          arg.value = PropRef{a["ref"].get<int>()};
        } else {
          arg.value = SpanFromJson(a.at("span"));
        }
        p.args.push_back(std::move(arg));
      }
      props.push_back(std::move(p));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("proposition JSON schema: ") + e.what(), 0);
  }
  return props;
}

}  // namespace kvdsum
