#!/usr/bin/env python3
# Copyright 2026 The kvdsum Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the synthetic mini corpus: corpus.jsonl plus one CoNLL-U file per
article, parsed by construction from a handful of sentence templates.

Output is fully determined by SEED; re-running reproduces the files byte for
byte.
"""

import json
import pathlib
import random

SEED = 20260412
HERE = pathlib.Path(__file__).parent

# (surface, lemma) pairs per topic.
TOPICS = {
    "oxidative": {
        "nouns": [("antioxidants", "antioxidant"), ("species", "species"),
                  ("cells", "cell"), ("damage", "damage"),
                  ("inflammation", "inflammation"), ("patients", "patient"),
                  ("enzymes", "enzyme"), ("stress", "stress")],
        "adjs": ["reactive", "oxidative", "chronic", "cellular", "severe"],
    },
    "cardiac": {
        "nouns": [("arteries", "artery"), ("pressure", "pressure"),
                  ("vessels", "vessel"), ("plaque", "plaque"),
                  ("patients", "patient"), ("lipids", "lipid"),
                  ("heart", "heart"), ("risk", "risk")],
        "adjs": ["coronary", "elevated", "arterial", "cardiac", "high"],
    },
    "microbial": {
        "nouns": [("bacteria", "bacterium"), ("strains", "strain"),
                  ("infection", "infection"), ("antibiotics", "antibiotic"),
                  ("resistance", "resistance"), ("genes", "gene"),
                  ("samples", "sample"), ("hosts", "host")],
        "adjs": ["resistant", "bacterial", "clinical", "novel", "multiple"],
    },
    "neural": {
        "nouns": [("neurons", "neuron"), ("synapses", "synapse"),
                  ("memory", "memory"), ("signals", "signal"),
                  ("cortex", "cortex"), ("receptors", "receptor"),
                  ("mice", "mouse"), ("activity", "activity")],
        "adjs": ["cortical", "synaptic", "neural", "long-term", "reduced"],
    },
    "metabolic": {
        "nouns": [("insulin", "insulin"), ("glucose", "glucose"),
                  ("liver", "liver"), ("obesity", "obesity"),
                  ("tissue", "tissue"), ("hormones", "hormone"),
                  ("diet", "diet"), ("levels", "level")],
        "adjs": ["metabolic", "hepatic", "adipose", "insulin-resistant",
                 "lower"],
    },
}

# Shared by every topic, so documents also carry generic vocabulary.
GENERIC = [("levels", "level"), ("function", "function"),
           ("expression", "expression"), ("response", "response"),
           ("treatment", "treatment"), ("mechanism", "mechanism"),
           ("models", "model"), ("outcomes", "outcome")]

# (surface, lemma) for verbs in active third person and past participle.
VERBS = [("affects", "affect", "affected"), ("regulates", "regulate", "regulated"),
         ("increases", "increase", "increased"), ("reduces", "reduce", "reduced"),
         ("modulates", "modulate", "modulated"), ("controls", "control", "controlled")]
PREPS = ["in", "with", "during", "for"]


class Builder:
    """Accumulates one sentence as (form, lemma, upos, head, deprel) rows."""

    def __init__(self):
        self.rows = []

    def add(self, form, lemma, upos, head, deprel):
        self.rows.append([form, lemma, upos, head, deprel])
        return len(self.rows)


def passive(rng, topic):
    # ADJ NOUN is VERBed by ADJ NOUN .
    n1, n2 = rng.sample(topic["nouns"], 2)
    a1, a2 = rng.sample(topic["adjs"], 2)
    _, vlemma, vpart = rng.choice(VERBS)
    b = Builder()
    b.add(a1.capitalize(), a1, "ADJ", 2, "amod")
    b.add(n1[0], n1[1], "NOUN", 4, "nsubj:pass")
    b.add("is", "be", "AUX", 4, "aux:pass")
    b.add(vpart, vlemma, "VERB", 0, "root")
    b.add("by", "by", "ADP", 7, "case")
    b.add(a2, a2, "ADJ", 7, "amod")
    b.add(n2[0], n2[1], "NOUN", 4, "obl:agent")
    b.add(".", ".", "PUNCT", 4, "punct")
    return b.rows


def active(rng, topic):
    # The NOUN of NOUN VERBs NOUN PREP NOUN .
    n1, n2, n3, n4 = rng.sample(topic["nouns"], 4)
    vform, vlemma, _ = rng.choice(VERBS)
    prep = rng.choice(PREPS)
    b = Builder()
    b.add("The", "the", "DET", 2, "det")
    b.add(n1[0], n1[1], "NOUN", 5, "nsubj")
    b.add("of", "of", "ADP", 4, "case")
    b.add(n2[0], n2[1], "NOUN", 2, "nmod")
    b.add(vform, vlemma, "VERB", 0, "root")
    b.add(n3[0], n3[1], "NOUN", 5, "obj")
    b.add(prep, prep, "ADP", 8, "case")
    b.add(n4[0], n4[1], "NOUN", 5, "obl")
    b.add(".", ".", "PUNCT", 5, "punct")
    return b.rows


def copula(rng, topic):
    # NOUN is a ADJ NOUN .
    n1, n2 = rng.sample(topic["nouns"], 2)
    adj = rng.choice(topic["adjs"])
    b = Builder()
    b.add(n1[0].capitalize(), n1[1], "NOUN", 5, "nsubj")
    b.add("is", "be", "AUX", 5, "cop")
    b.add("a", "a", "DET", 5, "det")
    b.add(adj, adj, "ADJ", 5, "amod")
    b.add(n2[0], n2[1], "NOUN", 0, "root")
    b.add(".", ".", "PUNCT", 5, "punct")
    return b.rows


def simple(rng, topic):
    # ADJ NOUN VERBs NOUN , which is ADJ .  (no relative clause: kept flat)
    n1, n2 = rng.sample(topic["nouns"], 2)
    adj = rng.choice(topic["adjs"])
    vform, vlemma, _ = rng.choice(VERBS)
    b = Builder()
    b.add(adj.capitalize(), adj, "ADJ", 2, "amod")
    b.add(n1[0], n1[1], "NOUN", 3, "nsubj")
    b.add(vform, vlemma, "VERB", 0, "root")
    b.add(n2[0], n2[1], "NOUN", 3, "obj")
    b.add(".", ".", "PUNCT", 3, "punct")
    return b.rows


TEMPLATES = [passive, active, copula, simple]


def conllu(rows):
    lines = []
    for i, (form, lemma, upos, head, deprel) in enumerate(rows, start=1):
        lines.append("\t".join([str(i), form, lemma, upos, "_", "_", str(head),
                                deprel, "_", "_"]))
    return "\n".join(lines) + "\n\n"


def make_article(rng, index, topic_name):
    topic = dict(TOPICS[topic_name])
    topic["nouns"] = topic["nouns"] + GENERIC
    article_id = "mini-%02d-%s" % (index, topic_name)
    # Headings deliberately vary; "Methods" and "Results" are filtered out.
    layout = [("Introduction", rng.randint(8, 12)),
              ("Methods", rng.randint(3, 5)),
              ("Results", rng.randint(2, 4)),
              (rng.choice(["Discussion", "DISCUSSION", "General discussion"]),
               rng.randint(12, 18)),
              (rng.choice(["Conclusion", "Conclusions", "Concluding remarks"]),
               rng.randint(3, 6))]
    sections = []
    kept_rows = []
    for name, count in layout:
        retained = name.lower() not in ("methods", "results")
        sentences = []
        for _ in range(count):
            rows = rng.choice(TEMPLATES)(rng, topic)
            sentences.append([r[0] for r in rows])
            if retained:
                kept_rows.append(rows)
        sections.append({"name": name, "sentences": sentences})
    # The abstract reuses a few retained sentences, lightly reordered.
    picked = rng.sample(kept_rows, 5)
    abstract = []
    for rows in picked:
        words = [r[0] for r in rows]
        if rng.random() < 0.5:
            words = words[:-1][::-1] + words[-1:]
        if rng.random() < 0.5:
            # Abstract-only wording the document never uses.
            words = ["Here", "we", "show", "that"] + [words[0].lower()] + words[1:]
        abstract.append(words)
    record = {"article_id": article_id, "sections": sections,
              "abstract": abstract}
    return article_id, record, "".join(conllu(r) for r in kept_rows)


def main():
    rng = random.Random(SEED)
    records = []
    for index, topic_name in enumerate(TOPICS, start=1):
        article_id, record, parses = make_article(rng, index, topic_name)
        records.append(record)
        (HERE / (article_id + ".conllu")).write_text(parses)
    # An article with no usable section; the loader must skip it.
    records.append({"article_id": "mini-99-unusable",
                    "sections": [{"name": "Methods",
                                  "sentences": [["Samples", "were", "collected", "."]]}],
                    "abstract": [["Samples", "were", "collected", "."]]})
    with open(HERE / "corpus.jsonl", "w") as f:
        for record in records:
            f.write(json.dumps(record) + "\n")


if __name__ == "__main__":
    main()
