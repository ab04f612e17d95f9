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

#include "kvdsum/memory.h"

#include <gtest/gtest.h>

#include <random>

#include "kvdsum/conllu.h"
#include "kvdsum/errors.h"
#include "kvdsum/golden.h"
#include "kvdsum/propositionizer.h"
#include "test_util.h"

namespace kvdsum {
namespace {

std::vector<Proposition> WorkedExampleProps() {
  return PropositionsFromJson(testing::ReadAll(testing::Fixture("table1.props.json")));
}

Document WorkedExampleDoc() {
  return LoadCorpus(testing::Fixture("table1.jsonl")).documents.at(0);
}

const NodeRecord& Node(const CycleSnapshot& c, int id) {
  for (const NodeRecord& n : c.nodes) {
    if (n.id == id) return n;
  }
  throw std::out_of_range("node " + std::to_string(id));
}

TEST(MemoryTreeTest, ShapeQueries) {
  MemoryTree t;
  EXPECT_TRUE(t.empty());
  t.SetRoot(1, 1);
  t.Insert(2, 1, 1);
  t.Insert(3, 1, 1);
  t.Insert(4, 3, 2);
  EXPECT_EQ(t.size(), 4);
  EXPECT_EQ(t.Children(1), (std::vector<int>{2, 3}));
  EXPECT_EQ(t.Depths(), (std::map<int, int>{{1, 1}, {2, 2}, {3, 2}, {4, 3}}));
  EXPECT_EQ(t.SubtreeSizes(), (std::map<int, int>{{1, 4}, {2, 1}, {3, 2}, {4, 1}}));
  EXPECT_EQ(t.Degree(1), 2);
  EXPECT_EQ(t.Degree(3), 2);
  EXPECT_EQ(t.Degree(4), 1);
}

TEST(MemoryTreeTest, RotateKeepsEveryEdge) {
  MemoryTree t;
  t.SetRoot(1, 1);
  t.Insert(2, 1, 1);
  t.Insert(3, 2, 1);
  t.Insert(4, 1, 1);
  t.RotateTo(3);
  EXPECT_EQ(t.root(), 3);
  EXPECT_EQ(t.Parent(3), 3);
  EXPECT_EQ(t.Parent(2), 3);
  EXPECT_EQ(t.Parent(1), 2);
  EXPECT_EQ(t.Parent(4), 1);
  for (int n : t.Nodes()) EXPECT_EQ(t.Degree(n), n == 3 || n == 4 ? 1 : 2);
}

TEST(SimulationTest, WorkedExampleTraceMatchesGolden) {
  const auto props = WorkedExampleProps();
  const SimulationTrace trace = RunSimulation(WorkedExampleDoc(), props, 5);
  const GoldenCheck check = VerifyGolden(trace, WorkedExampleGoldenTrace());
  EXPECT_TRUE(check.ok) << ::testing::PrintToString(check.diffs);
  EXPECT_EQ(TraceToJson(trace),
            testing::ReadAll(testing::Fixture("table1.trace.golden.json")));
  ASSERT_EQ(trace.recalls.size(), 1u);
  EXPECT_EQ(trace.recalls[0].cycle, 3);
  EXPECT_EQ(trace.recalls[0].prop_id, 8);
}

TEST(SimulationTest, WorkedExampleOccurrenceShapes) {
  const SimulationTrace trace = RunSimulation(WorkedExampleDoc(), WorkedExampleProps(), 5);
  // Tree (2b): node 10 is the root over five nodes, 13 hangs four deep.
  const NodeRecord& root = Node(trace.cycles[1], 10);
  EXPECT_EQ(root.depth, 1);
  EXPECT_EQ(root.degree, 2);
  EXPECT_EQ(root.subtree, 5);
  const NodeRecord& leaf = Node(trace.cycles[1], 13);
  EXPECT_EQ(leaf.depth, 4);
  EXPECT_EQ(leaf.degree, 1);
  EXPECT_EQ(leaf.subtree, 1);
  // Final long-term status: only the cycle-3 tree survives.
  for (const auto& [id, forgotten] : trace.forgotten) {
    const bool kept = id == 8 || id == 10 || id == 11 || id == 15 || id == 16;
    EXPECT_EQ(forgotten, !kept) << id;
  }
  EXPECT_EQ(trace.occurrences.size(), 15u);
}

TEST(SimulationTest, PropositionizerOutputGivesSameTrace) {
  const Document doc = WorkedExampleDoc();
  const auto props =
      ExtractDocumentPropositions(doc, ReadConllu(testing::Fixture("table1.conllu")));
  EXPECT_EQ(TraceToJson(RunSimulation(doc, props, 5)),
            TraceToJson(RunSimulation(doc, WorkedExampleProps(), 5)));
}

TEST(SimulationTest, LargeLimitKeepsEverythingWithoutRecall) {
  const SimulationTrace trace = RunSimulation(WorkedExampleDoc(), WorkedExampleProps(), 100);
  EXPECT_EQ(trace.cycles.back().nodes.size(), 17u);
  EXPECT_TRUE(trace.recalls.empty());
}

TEST(SimulationTest, RejectsNonPositiveLimit) {
  EXPECT_THROW(RunSimulation(WorkedExampleDoc(), WorkedExampleProps(), 0), ConfigError);
}

TEST(SimulationTest, SectionBoundaryClearsTheTree) {
  Document doc = WorkedExampleDoc();
  // Put the third sentence in a new section.
  doc.sentences[2].section = SectionKind::kDiscussion;
  doc.sections = {{SectionKind::kIntroduction, 0, 2},
                  {SectionKind::kDiscussion, 2, 3}};
  auto props = WorkedExampleProps();
  for (auto& p : props) {
    if (p.sentence_id == 2) p.section = SectionKind::kDiscussion;
  }
  const SimulationTrace trace = RunSimulation(doc, props, 5);
  ASSERT_EQ(trace.cycles.size(), 3u);
  EXPECT_EQ(trace.cycles[2].section, SectionKind::kDiscussion);
  for (const NodeRecord& n : trace.cycles[2].nodes) {
    EXPECT_GE(n.id, 8) << "node from the previous section survived";
    EXPECT_NE(n.id, 10);
  }
}

TEST(SimulationTest, SentenceWithoutPropositionsKeepsTree) {
  Document doc = WorkedExampleDoc();
  auto props = WorkedExampleProps();
  props.resize(7);  // only the first sentence yields propositions
  const SimulationTrace trace = RunSimulation(doc, props, 5);
  ASSERT_EQ(trace.cycles.size(), 3u);
  EXPECT_EQ(trace.cycles[1].NodeIds(), trace.cycles[0].NodeIds());
  EXPECT_EQ(trace.cycles[2].root, trace.cycles[0].root);
  EXPECT_EQ(trace.occurrences.size(), 15u);
}

TEST(SimulationTest, InvariantsOnMiniCorpus) {
  const auto corpus = LoadCorpus(testing::Fixture("mini_corpus/corpus.jsonl"));
  for (const Document& doc : corpus.documents) {
    const auto props = ExtractDocumentPropositions(
        doc, ReadConllu(testing::Fixture("mini_corpus/" + doc.id + ".conllu")));
    for (int m : {1, 2, 5, 20}) {
      const SimulationTrace trace = RunSimulation(doc, props, m);
      ASSERT_EQ(trace.cycles.size(), doc.sentences.size());
      std::map<int, int> recalls_per_cycle;
      for (const RecallEvent& r : trace.recalls) ++recalls_per_cycle[r.cycle];
      for (const auto& [cycle, count] : recalls_per_cycle) {
        EXPECT_LE(count, kMaxRecallsPerCycle);
      }
      for (const CycleSnapshot& c : trace.cycles) {
        EXPECT_LE(static_cast<int>(c.nodes.size()), m);
        if (c.nodes.empty()) continue;
        // Connected rooted tree: every parent chain reaches the root.
        std::map<int, int> parent;
        for (const NodeRecord& n : c.nodes) parent[n.id] = n.parent;
        int roots = 0;
        for (const NodeRecord& n : c.nodes) {
          if (n.parent == n.id) {
            ++roots;
            EXPECT_EQ(n.id, c.root);
            EXPECT_EQ(n.depth, 1);
          } else {
            ASSERT_TRUE(parent.count(n.parent));
          }
          EXPECT_LE(n.subtree, m);
        }
        EXPECT_EQ(roots, 1);
      }
    }
  }
}

TEST(PruneTest, RandomTreesKeepConnectedRootedSubset) {
  std::mt19937 rng(7);
  std::vector<Proposition> props;
  for (int i = 1; i <= 40; ++i) {
    Proposition p;
    p.id = i;
    p.args.push_back(Argument{"", WordSpan{{"w"}, {"w"}}});
    props.push_back(p);
  }
  for (int trial = 0; trial < 200; ++trial) {
    LongTermStore store(props);
    MemoryTree t;
    const int n = 2 + static_cast<int>(rng() % 39);
    t.SetRoot(1, 1);
    for (int i = 2; i <= n; ++i) {
      t.Insert(i, 1 + static_cast<int>(rng() % (i - 1)), 1 + static_cast<int>(rng() % 5));
    }
    const int limit = 1 + static_cast<int>(rng() % 10);
    const std::set<int> kept = PruneLeadingEdge(t, limit, store);
    EXPECT_EQ(static_cast<int>(kept.size()), std::min(n, limit));
    EXPECT_TRUE(kept.count(1));
    for (int id : kept) {
      EXPECT_TRUE(id == 1 || kept.count(t.Parent(id))) << "orphan " << id;
    }
    for (int i = 1; i <= n; ++i) EXPECT_EQ(store.IsForgotten(i), !kept.count(i));
  }
}

TEST(PruneTest, LeadingEdgeFollowsMostRecentChild) {
  std::vector<Proposition> props(6);
  for (int i = 0; i < 6; ++i) props[i].id = i + 1;
  LongTermStore store(props);
  MemoryTree t;
  t.SetRoot(1, 1);
  t.Insert(2, 1, 1);
  t.Insert(3, 1, 2);
  t.Insert(4, 3, 3);
  t.Insert(5, 2, 1);
  t.Insert(6, 4, 3);
  // Path 1-3-4-6 (most recent first), then shallowest filler 2.
  EXPECT_EQ(PruneLeadingEdge(t, 5, store), (std::set<int>{1, 2, 3, 4, 6}));
  EXPECT_EQ(PruneLeadingEdge(t, 3, store), (std::set<int>{1, 3, 4}));
}

TEST(RerootTest, MostReferencingNodeWinsAndRootKeepsTies) {
  auto props = WorkedExampleProps();
  LongTermStore store(props);
  MemoryTree t;
  t.SetRoot(10, 1);
  t.Insert(8, 10, 1);
  t.Insert(11, 10, 1);
  Reroot(t, store);
  EXPECT_EQ(t.root(), 11);  // 11 refers to both 10 and 8
  EXPECT_EQ(t.Parent(10), 11);
  EXPECT_EQ(t.Parent(8), 10);

  MemoryTree flat;
  flat.SetRoot(3, 1);
  flat.Insert(2, 3, 1);
  Reroot(flat, store);
  EXPECT_EQ(flat.root(), 3);  // nobody references anybody: root stays
}

}  // namespace
}  // namespace kvdsum
