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

#include <algorithm>
#include <set>
#include <utility>

#include "kvdsum/errors.h"

namespace kvdsum {
namespace {

// Head nouns that quantify their "of" dependent ("a number of X").
const std::set<std::string>& QuantifierNouns() {
  static const std::set<std::string>* nouns = new std::set<std::string>{
      "number", "lot",    "variety",  "range",   "majority", "series",
      "couple", "amount", "plenty",   "host",    "array",    "handful",
      "dozen",  "set",    "multitude", "deal",   "bunch",    "spectrum"};
  return *nouns;
}

bool IsCoreSpanRelation(std::string_view base) {
  return base == "det" || base == "compound" || base == "flat" ||
         base == "fixed" || base == "nummod" || base == "goeswith";
}

enum class Rule { kModifier, kPredication, kApposition, kCopula, kRelation };

struct Trigger {
  int position;
  Rule rule;
  int target;  // token the rule is about (modified head, verb, ...)
};

}  // namespace

class Propositionizer::SentenceContext {
 public:
  explicit SentenceContext(const ParsedSentence& s)
      : s_(s), children_(s.tokens.size() + 1) {
    for (const ParsedToken& t : s.tokens) {
      if (t.head > 0) children_[t.head].push_back(t.index);
    }
  }

  const ParsedToken& tok(int i) const { return s_.tokens[i - 1]; }
  const std::vector<int>& children(int i) const { return children_[i]; }
  int size() const { return static_cast<int>(s_.tokens.size()); }

  int FirstChild(int i, std::string_view deprel) const {
    for (int c : children_[i]) {
      if (tok(c).deprel == deprel) return c;
    }
    return 0;
  }
  int FirstChildBase(int i, std::string_view base) const {
    for (int c : children_[i]) {
      if (tok(c).BaseRelation() == base) return c;
    }
    return 0;
  }

  // The head word with its determiners, compounds and numerals.
  std::vector<int> Core(int i) const {
    std::vector<int> out{i};
    for (int c : children_[i]) {
      if (IsCoreSpanRelation(tok(c).BaseRelation())) {
        std::vector<int> sub = Core(c);
        out.insert(out.end(), sub.begin(), sub.end());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Everything the phrase headed by i covers, minus its own case marker,
  // punctuation and appositive restatements.
  std::vector<int> Mention(int i) const {
    std::vector<int> out;
    CollectMention(i, /*top=*/true, &out);
    std::sort(out.begin(), out.end());
    return out;
  }

  WordSpan Span(const std::vector<int>& tokens) const {
    WordSpan span;
    for (int t : tokens) {
      span.words.push_back(tok(t).form);
      span.lemmas.push_back(tok(t).lemma);
    }
    return span;
  }

  std::vector<std::string> Lemmas(const std::vector<int>& tokens) const {
    std::vector<std::string> out;
    for (int t : tokens) out.push_back(tok(t).lemma);
    return out;
  }

  // Case marker of a nominal, with any fixed continuation ("due to").
  std::vector<int> CaseMarker(int nominal) const {
    int c = FirstChildBase(nominal, "case");
    if (c == 0) return {};
    std::vector<int> out{c};
    for (int f : children_[c]) {
      if (tok(f).BaseRelation() == "fixed") out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string Label(const std::vector<int>& marker) const {
    std::string out;
    for (int t : marker) {
      if (!out.empty()) out += ' ';
      out += tok(t).lemma;
    }
    return out;
  }

 private:
  void CollectMention(int i, bool top, std::vector<int>* out) const {
    out->push_back(i);
    for (int c : children_[i]) {
      std::string_view base = tok(c).BaseRelation();
      if (base == "punct" || base == "appos") continue;
      if (top && base == "case") continue;
      CollectMention(c, false, out);
    }
  }

  const ParsedSentence& s_;
  std::vector<std::vector<int>> children_;
};

Propositionizer::Propositionizer(const StopLemmas& stop) : stop_(stop) {}

std::vector<std::string> Propositionizer::Content(
    const std::vector<std::string>& lemmas) const {
  std::vector<std::string> out;
  for (const std::string& l : lemmas) {
    auto alias = aliases_.find(l);
    if (alias != aliases_.end()) {
      for (const std::string& e : alias->second) {
        if (!stop_.Contains(e)) out.push_back(e);
      }
    } else if (!stop_.Contains(l)) {
      out.push_back(l);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Argument Propositionizer::Resolve(const SentenceContext& ctx, int token,
                                  int sentence_id,
                                  bool follow_quantifier) const {
  if (follow_quantifier && QuantifierNouns().count(ctx.tok(token).lemma)) {
    for (int c : ctx.children(token)) {
      if (ctx.tok(c).BaseRelation() != "nmod") continue;
      if (ctx.Label(ctx.CaseMarker(c)) == "of") {
        token = c;
        break;
      }
    }
  }
  const std::vector<std::string> mention =
      Content(ctx.Lemmas(ctx.Mention(token)));
  if (!mention.empty()) {
    for (std::size_t i = props_.size(); i-- > 0;) {
      const Proposition& p = props_[i];
      // A modified phrase only points back at a modifier proposition from an
      // earlier sentence; within the sentence the modifier is already linked
      // through its head.
      if (p.IsUnaryModifier() && p.sentence_id >= sentence_id) continue;
      if (Content(match_lemmas_[i]) == mention) {
        return Argument{"", PropRef{p.id}};
      }
    }
  }
  return Argument{"", ctx.Span(ctx.Core(token))};
}

void Propositionizer::Add(Proposition p, std::vector<std::string> match_lemmas,
                          std::vector<Proposition>* out) {
  if (p.args.empty()) return;
  p.id = static_cast<int>(props_.size()) + 1;
  props_.push_back(p);
  match_lemmas_.push_back(std::move(match_lemmas));
  out->push_back(std::move(p));
}

std::vector<Proposition> Propositionizer::Extract(const ParsedSentence& sentence,
                                                  int sentence_id,
                                                  SectionKind section) {
  SentenceContext ctx(sentence);
  std::vector<Trigger> triggers;
  for (int i = 1; i <= ctx.size(); ++i) {
    const ParsedToken& t = ctx.tok(i);
    std::string_view base = t.BaseRelation();
    if (base == "amod" && t.head > 0) {
      triggers.push_back({i, Rule::kModifier, t.head});
    } else if (base == "conj" && t.head > 0 &&
               ctx.tok(t.head).BaseRelation() == "amod" &&
               ctx.tok(t.head).head > 0) {
      triggers.push_back({i, Rule::kModifier, ctx.tok(t.head).head});
    } else if (base == "appos" && t.head > 0) {
      triggers.push_back({i, Rule::kApposition, t.head});
    } else if (base == "cop" && t.head > 0) {
      triggers.push_back({i, Rule::kCopula, t.head});
    } else if (base == "case" && t.head > 0 &&
               ctx.tok(t.head).BaseRelation() == "nmod" &&
               ctx.tok(t.head).head > 0) {
      triggers.push_back({i, Rule::kRelation, t.head});
    }
    if (t.upos == "VERB") triggers.push_back({i, Rule::kPredication, i});
  }
  std::stable_sort(triggers.begin(), triggers.end(),
                   [](const Trigger& a, const Trigger& b) {
                     return a.position < b.position;
                   });

  std::vector<Proposition> out;
  for (const Trigger& trig : triggers) {
    Proposition p;
    p.sentence_id = sentence_id;
    p.section = section;
    std::vector<std::string> match;

    switch (trig.rule) {
      case Rule::kModifier: {
        // The modified phrase is a re-mention of an earlier proposition.
        if (Resolve(ctx, trig.target, sentence_id, false).IsRef()) continue;
        p.kind = PropKind::kModifier;
        p.predicate = ctx.Span({trig.position});
        WordSpan head = ctx.Span(ctx.Core(trig.target));
        match = p.predicate.lemmas;
        match.insert(match.end(), head.lemmas.begin(), head.lemmas.end());
        p.args.push_back(Argument{"", std::move(head)});
        break;
      }
      case Rule::kPredication: {
        const int verb = trig.target;
        std::vector<int> pred{verb};
        for (int c : ctx.children(verb)) {
          const ParsedToken& ct = ctx.tok(c);
          if (ct.BaseRelation() == "aux" || ct.deprel == "compound:prt" ||
              (ct.BaseRelation() == "advmod" &&
               (ct.lemma == "not" || ct.lemma == "never" || ct.lemma == "n't"))) {
            pred.push_back(c);
          }
        }
        std::sort(pred.begin(), pred.end());
        p.kind = PropKind::kPredication;
        p.predicate = ctx.Span(pred);

        int subj = ctx.FirstChild(verb, "nsubj");
        if (subj == 0) subj = ctx.FirstChildBase(verb, "csubj");
        // Conjoined verbs share the subject of the first conjunct.
        if (subj == 0 && ctx.tok(verb).BaseRelation() == "conj") {
          subj = ctx.FirstChild(ctx.tok(verb).head, "nsubj");
        }
        const int pass_subj = ctx.FirstChild(verb, "nsubj:pass");
        const bool passive =
            pass_subj != 0 || ctx.FirstChild(verb, "aux:pass") != 0;
        const int obj = ctx.FirstChildBase(verb, "obj");
        const int iobj = ctx.FirstChildBase(verb, "iobj");
        int agent = ctx.FirstChild(verb, "obl:agent");
        std::vector<int> obliques;
        for (int c : ctx.children(verb)) {
          if (ctx.tok(c).BaseRelation() == "obl" && c != agent) {
            obliques.push_back(c);
          }
        }
        if (passive && agent == 0) {
          auto post = std::find_if(obliques.begin(), obliques.end(),
                                   [verb](int c) { return c > verb; });
          if (post != obliques.end()) {
            agent = *post;
            obliques.erase(post);
          }
        }

        auto add_arg = [&](int tok) {
          if (tok != 0) p.args.push_back(Resolve(ctx, tok, sentence_id, true));
        };
        if (passive) {
          add_arg(agent);
          add_arg(pass_subj);
        } else {
          add_arg(subj);
        }
        add_arg(obj);
        add_arg(iobj);
        for (int o : obliques) {
          std::vector<int> marker = ctx.CaseMarker(o);
          if (marker.empty()) continue;
          Argument a = Resolve(ctx, o, sentence_id, true);
          a.label = ctx.Label(marker);
          p.args.push_back(std::move(a));
        }
        match = ctx.Lemmas(ctx.Mention(verb));
        break;
      }
      case Rule::kApposition: {
        const int head = trig.target;
        const int appos = trig.position;
        p.kind = PropKind::kIdentity;
        p.predicate = WordSpan{{"BE"}, {"be"}};
        WordSpan left = ctx.Span(ctx.Core(head));
        WordSpan right = ctx.Span(ctx.Core(appos));
        match = ctx.Lemmas(ctx.Mention(head));
        if (right.lemmas.size() == 1 && !stop_.Contains(right.lemmas[0])) {
          aliases_[right.lemmas[0]] = left.lemmas;
        }
        p.args.push_back(Argument{"", std::move(left)});
        p.args.push_back(Argument{"", std::move(right)});
        break;
      }
      case Rule::kCopula: {
        const int pred = trig.target;
        int subj = ctx.FirstChildBase(pred, "nsubj");
        if (subj == 0) continue;
        p.kind = PropKind::kIdentity;
        p.predicate = WordSpan{{"BE"}, {"be"}};
        p.args.push_back(Resolve(ctx, subj, sentence_id, true));
        p.args.push_back(Argument{"", ctx.Span(ctx.Core(pred))});
        match = ctx.Lemmas(ctx.Mention(pred));
        break;
      }
      case Rule::kRelation: {
        const int dependent = trig.target;
        const int head = ctx.tok(dependent).head;
        const std::vector<int> marker = ctx.CaseMarker(dependent);
        const std::string label = ctx.Label(marker);
        Argument dep = Resolve(ctx, dependent, sentence_id, true);
        if (label != "of" && dep.IsRef()) {
          p.kind = PropKind::kNominal;
          p.predicate = ctx.Span(ctx.Core(head));
          dep.label = label;
          p.args.push_back(std::move(dep));
        } else {
          p.kind = PropKind::kRelation;
          p.predicate = ctx.Span(marker);
          p.args.push_back(Argument{"", ctx.Span(ctx.Core(head))});
          p.args.push_back(std::move(dep));
        }
        match = ctx.Lemmas(ctx.Mention(head));
        break;
      }
    }
    Add(std::move(p), std::move(match), &out);
  }
  return out;
}

std::vector<Proposition> ExtractDocumentPropositions(
    const Document& doc, const std::vector<ParsedSentence>& parses) {
  CheckAlignment(parses, static_cast<int>(doc.sentences.size()), doc.id);
  Propositionizer extractor;
  for (const Sentence& s : doc.sentences) {
    extractor.Extract(parses[s.id], s.id, s.section);
  }
  return extractor.propositions();
}

}  // namespace kvdsum
