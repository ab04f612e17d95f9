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
"""Writes table1.trace.golden.json from the pruned trees of the worked example.

Edges are read off the three drawn trees (child -> parent); depth, degree and
subtree sizes are recomputed here, independently of the C++ code.
"""

import json
import pathlib

# (root, {child: parent}, recalled ids) for the trees kept after each cycle.
TREES = [
    (4, {2: 4, 3: 4, 5: 4, 7: 5}, set()),
    (10, {7: 10, 11: 10, 12: 11, 13: 12}, set()),
    (11, {10: 11, 8: 11, 15: 8, 16: 15}, {8}),
]


def node_records(root, parent, recalled):
    parent = dict(parent)
    parent[root] = root
    children = {n: [c for c, p in parent.items() if p == n and c != n]
                for n in parent}

    def depth(n):
        return 1 if n == root else 1 + depth(parent[n])

    def subtree(n):
        return 1 + sum(subtree(c) for c in children[n])

    return [{
        "id": n,
        "parent": parent[n],
        "depth": depth(n),
        "degree": len(children[n]) + (0 if n == root else 1),
        "subtree": subtree(n),
        "recalled": n in recalled,
    } for n in sorted(parent)]


def main():
    cycles = []
    for i, (root, parent, recalled) in enumerate(TREES):
        cycles.append({
            "cycle": i + 1,
            "section": "introduction",
            "sentence_id": i,
            "root": root,
            "nodes": node_records(root, parent, recalled),
        })
    trace = {"article_id": "table1", "memory_limit": 5, "cycles": cycles}
    out = pathlib.Path(__file__).with_name("table1.trace.golden.json")
    out.write_text(json.dumps(trace, indent=2) + "\n")


if __name__ == "__main__":
    main()
