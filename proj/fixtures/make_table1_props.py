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
"""Writes table1.props.json, the seventeen propositions of the worked example.

The list is typed in by hand so that memory tests do not depend on the
propositionizer. Two typos of the printed table are corrected
("nonenzimatic" -> "nonenzymatic", "lipib-soluble" -> "lipid-soluble").
"""

import json
import pathlib


def span(*pairs):
    return {"words": [w for w, _ in pairs], "lemmas": [l for _, l in pairs]}


def w(word, lemma=None):
    return (word, lemma if lemma is not None else word.lower())


def arg(value, label=""):
    if isinstance(value, int):
        return {"label": label, "ref": value}
    return {"label": label, "span": value}


ANTIOXIDANTS = span(w("antioxidants", "antioxidant"))
SPECIES = span(w("species"))
CF = span(w("cystic"), w("fibrosis"))
VITAMINS = span(w("vitamins", "vitamin"))
MALABSORTION = span(w("malabsortion"))
DEPLETION = span(w("depletion"))

# (id, kind, sentence, predicate, args, printed form)
PROPS = [
    (1, "modifier", 0, span(w("healthy")), [arg(span(w("people")))],
     "healthy(people)"),
    (2, "modifier", 0, span(w("reactive")), [arg(SPECIES)],
     "reactive(species)"),
    (3, "modifier", 0, span(w("oxidant")), [arg(SPECIES)],
     "oxidant(species)"),
    (4, "predication", 0, span(w("are", "be"), w("controlled", "control")),
     [arg(ANTIOXIDANTS), arg(SPECIES), arg(span(w("people")), "in")],
     "are controlled(antioxidants, species, in:people)"),
    (5, "relation", 0, span(w("of")),
     [arg(span(w("a"), w("number"))), arg(ANTIOXIDANTS)],
     "of(a number, antioxidants)"),
    (6, "modifier", 0, span(w("enzymatic")), [arg(ANTIOXIDANTS)],
     "enzymatic(antioxidants)"),
    (7, "modifier", 0, span(w("nonenzymatic")), [arg(ANTIOXIDANTS)],
     "nonenzymatic(antioxidants)"),
    (8, "relation", 1, span(w("with")),
     [arg(span(w("patients", "patient"))), arg(CF)],
     "with(patients, cystic fibrosis)"),
    (9, "identity", 1, span(w("BE", "be")), [arg(CF), arg(span(w("cf")))],
     "BE(cystic fibrosis, cf)"),
    (10, "relation", 1, span(w("of")), [arg(span(w("deficiency"))), arg(7)],
     "of(deficiency, #7)"),
    (11, "predication", 1, span(w("is", "be"), w("linked", "link")),
     [arg(MALABSORTION), arg(10), arg(8, "in")],
     "is linked(malabsortion, #10, in:#8)"),
    (12, "relation", 1, span(w("of")), [arg(MALABSORTION), arg(VITAMINS)],
     "of(malabsortion, vitamins)"),
    (13, "modifier", 1, span(w("lipid-soluble")), [arg(VITAMINS)],
     "lipid-soluble(vitamins)"),
    (14, "modifier", 2, span(w("pulmonary")),
     [arg(span(w("inflammation")))], "pulmonary(inflammation)"),
    (15, "nominal", 2, span(w("inflammation")), [arg(8, "in")],
     "inflammation(in:#8)"),
    (16, "predication", 2, span(w("contributes", "contribute")),
     [arg(15), arg(DEPLETION, "to")], "contributes(#15, to:depletion)"),
    (17, "relation", 2, span(w("of")), [arg(DEPLETION), arg(ANTIOXIDANTS)],
     "of(depletion, antioxidants)"),
]


def main():
    out = []
    for pid, kind, sentence, predicate, args, text in PROPS:
        out.append({
            "id": pid,
            "kind": kind,
            "sentence_id": sentence,
            "section": "introduction",
            "predicate": predicate,
            "args": args,
            "text": "%d: %s" % (pid, text),
        })
    path = pathlib.Path(__file__).with_name("table1.props.json")
    path.write_text(json.dumps(out, indent=2) + "\n")


if __name__ == "__main__":
    main()
