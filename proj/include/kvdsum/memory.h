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

#ifndef KVDSUM_MEMORY_H_
#define KVDSUM_MEMORY_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "kvdsum/corpus.h"
#include "kvdsum/proposition.h"

namespace kvdsum {

// Working-memory tree over proposition ids. The root is its own parent.
class MemoryTree {
 public:
  bool empty() const { return parent_.empty(); }
  int size() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  bool Contains(int id) const { return parent_.count(id) > 0; }
  int Parent(int id) const { return parent_.at(id); }
  int Recency(int id) const { return recency_.at(id); }
  bool IsRecalled(int id) const { return recalled_.count(id) > 0; }
  const std::set<int>& recalled() const { return recalled_; }

  std::vector<int> Nodes() const;            // ascending ids
  std::vector<int> Children(int id) const;   // ascending ids
  std::map<int, int> Depths() const;         // root = 1
  std::map<int, int> SubtreeSizes() const;   // inclusive
  int Degree(int id) const;                  // undirected

  // Makes `id` the root of an empty tree.
  void SetRoot(int id, int cycle);
  void Insert(int id, int parent, int cycle);
  void MarkRecalled(int id) { recalled_.insert(id); }
  void ClearRecalled() { recalled_.clear(); }
  // Keeps exactly `keep`, which must contain the root and be connected.
  void Retain(const std::set<int>& keep);
  // Rotates the tree so that `id` becomes the root, preserving all edges.
  void RotateTo(int id);
  void Clear();

 private:
  int root_ = 0;
  std::map<int, int> parent_;
  std::map<int, int> recency_;
  std::set<int> recalled_;
};

// Every proposition of a document and whether it sits in working memory or
// has been forgotten to long-term memory.
class LongTermStore {
 public:
  explicit LongTermStore(std::span<const Proposition> props,
                         const StopLemmas& stop = StopLemmas::Default());

  const Proposition& Get(int id) const;
  bool Shares(int a, int b) const;
  // `anchor` may take `child` as a child: they share an argument, and a
  // modifier anchor is only used through an explicit reference.
  bool CanAnchor(int anchor, int child, bool is_root) const;
  bool IsForgotten(int id) const { return forgotten_.count(id) > 0; }
  const std::set<int>& forgotten() const { return forgotten_; }
  int LastSeen(int id) const;  // cycle of last insertion or recall, 0 if never

  void MarkActive(int id, int cycle);
  void MarkForgotten(int id) { forgotten_.insert(id); }

 private:
  std::map<int, const Proposition*> by_id_;
  std::map<int, std::set<std::string>> lemmas_;
  std::set<int> forgotten_;
  std::map<int, int> last_seen_;
};

struct Occurrence {
  int prop_id = 0;
  int cycle = 0;  // global, 1-based
  SectionKind section = SectionKind::kIntroduction;
  int depth = 1;
  int degree = 0;
  int subtree_size = 1;
};

struct NodeRecord {
  int id = 0;
  int parent = 0;  // the root records itself
  int depth = 1;
  int degree = 0;
  int subtree = 1;
  bool recalled = false;
};

struct CycleSnapshot {
  int cycle = 0;
  SectionKind section = SectionKind::kIntroduction;
  int sentence_id = 0;
  int root = 0;  // 0 when the tree is empty
  std::vector<NodeRecord> nodes;  // ascending ids

  std::set<int> NodeIds() const;
};

struct RecallEvent {
  int cycle = 0;
  int prop_id = 0;
};

struct SimulationTrace {
  std::string article_id;
  int memory_limit = 0;
  std::vector<CycleSnapshot> cycles;
  std::vector<Occurrence> occurrences;
  std::map<int, bool> forgotten;  // final long-term status per proposition
  std::vector<RecallEvent> recalls;
};

struct AttachResult {
  std::vector<int> recalled;
  bool rerooted = false;
};

inline constexpr int kMaxRecallsPerCycle = 2;

// Adds the cycle's propositions (ascending ids) to the tree. Each proposition
// hangs under the best anchor that shares an argument with it (explicit
// reference first, then most recent, then highest id); propositions of the
// same cycle may anchor each other and attachment repeats until nothing more
// fits. When nothing fits, up to two forgotten propositions linking the tree
// to a pending one are recalled; failing that, the lowest pending id goes
// under the root. If exactly one node already in the tree gained new
// children and it is not the root, the tree is rotated onto it.
AttachResult Attach(MemoryTree& tree, std::span<const int> incoming,
                    LongTermStore& store, int cycle);

// Leading-edge selection: keep the path that follows the most recent child
// from the root, truncated to `limit`, and fill spare capacity with the
// shallowest, then most recent, then highest-id nodes. Dropped nodes are
// marked forgotten in the store. Returns the kept set.
std::set<int> PruneLeadingEdge(MemoryTree& tree, int limit,
                               LongTermStore& store);

// Moves the root to the node referencing the most other nodes of the tree.
// The current root keeps its place on ties; otherwise the smaller id wins.
void Reroot(MemoryTree& tree, const LongTermStore& store);

std::vector<Occurrence> RecordOccurrences(const MemoryTree& tree, int cycle,
                                          SectionKind section);

// Reads the document one sentence per cycle. The tree is cleared at every
// section boundary while the long-term store persists; cycles are numbered
// across the whole document. Sentences without propositions leave the tree
// as it was but still record its occurrences.
SimulationTrace RunSimulation(const Document& doc,
                              std::span<const Proposition> props,
                              int memory_limit);

std::string TraceToJson(const SimulationTrace& trace);

}  // namespace kvdsum

#endif  // KVDSUM_MEMORY_H_
