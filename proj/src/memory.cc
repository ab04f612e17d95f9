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

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <tuple>

#include "json.hpp"
#include "kvdsum/errors.h"

namespace kvdsum {

// ---- MemoryTree ------------------------------------------------------------

std::vector<int> MemoryTree::Nodes() const {
  std::vector<int> out;
  out.reserve(parent_.size());
  for (const auto& [id, parent] : parent_) out.push_back(id);
  return out;
}

std::vector<int> MemoryTree::Children(int id) const {
  std::vector<int> out;
  for (const auto& [node, parent] : parent_) {
    if (parent == id && node != id) out.push_back(node);
  }
  return out;
}

std::map<int, int> MemoryTree::Depths() const {
  std::map<int, int> depth;
  if (empty()) return depth;
  std::deque<int> queue{root_};
  depth[root_] = 1;
  while (!queue.empty()) {
    int n = queue.front();
    queue.pop_front();
    for (int c : Children(n)) {
      depth[c] = depth[n] + 1;
      queue.push_back(c);
    }
  }
  return depth;
}

std::map<int, int> MemoryTree::SubtreeSizes() const {
  std::map<int, int> size;
  if (empty()) return size;
  std::function<int(int)> visit = [&](int n) {
    int total = 1;
    for (int c : Children(n)) total += visit(c);
    size[n] = total;
    return total;
  };
  visit(root_);
  return size;
}

int MemoryTree::Degree(int id) const {
  return static_cast<int>(Children(id).size()) + (id == root_ ? 0 : 1);
}

void MemoryTree::SetRoot(int id, int cycle) {
  Clear();
  root_ = id;
  parent_[id] = id;
  recency_[id] = cycle;
}

void MemoryTree::Insert(int id, int parent, int cycle) {
  parent_[id] = parent;
  recency_[id] = cycle;
}

void MemoryTree::Retain(const std::set<int>& keep) {
  for (auto it = parent_.begin(); it != parent_.end();) {
    if (keep.count(it->first)) {
      ++it;
      continue;
    }
    recency_.erase(it->first);
    recalled_.erase(it->first);
    it = parent_.erase(it);
  }
}

void MemoryTree::RotateTo(int id) {
  if (id == root_) return;
  std::vector<int> path{id};
  while (path.back() != root_) path.push_back(parent_.at(path.back()));
  for (std::size_t i = path.size() - 1; i > 0; --i) {
    parent_[path[i]] = path[i - 1];
  }
  parent_[id] = id;
  root_ = id;
}

void MemoryTree::Clear() {
  root_ = 0;
  parent_.clear();
  recency_.clear();
  recalled_.clear();
}

// ---- LongTermStore ---------------------------------------------------------

LongTermStore::LongTermStore(std::span<const Proposition> props,
                             const StopLemmas& stop) {
  for (const Proposition& p : props) {
    by_id_[p.id] = &p;
    lemmas_[p.id] = OverlapLemmas(p, stop);
  }
}

const Proposition& LongTermStore::Get(int id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) {
    throw Error("unknown proposition " + std::to_string(id));
  }
  return *it->second;
}

bool LongTermStore::Shares(int a, int b) const {
  const Proposition& p = Get(a);
  const Proposition& q = Get(b);
  if (p.References(b) || q.References(a)) return true;
  const std::set<std::string>& x = lemmas_.at(a);
  const std::set<std::string>& y = lemmas_.at(b);
  return std::any_of(x.begin(), x.end(),
                     [&y](const std::string& l) { return y.count(l) > 0; });
}

bool LongTermStore::CanAnchor(int anchor, int child, bool is_root) const {
  const Proposition& a = Get(anchor);
  const Proposition& c = Get(child);
  if (a.References(child) || c.References(anchor)) return true;
  if (a.IsUnaryModifier() && !is_root) return false;
  return Shares(anchor, child);
}

int LongTermStore::LastSeen(int id) const {
  auto it = last_seen_.find(id);
  return it == last_seen_.end() ? 0 : it->second;
}

void LongTermStore::MarkActive(int id, int cycle) {
  forgotten_.erase(id);
  last_seen_[id] = cycle;
}

// ---- Cycle operations ------------------------------------------------------

namespace {

bool IsRefLink(const LongTermStore& store, int a, int b) {
  return store.Get(a).References(b) || store.Get(b).References(a);
}

// Best anchor in the tree for `id`, or nullopt.
std::optional<int> BestAnchor(const MemoryTree& tree, const LongTermStore& store,
                              int id) {
  std::optional<int> best;
  std::tuple<bool, int, int> best_rank;
  for (int a : tree.Nodes()) {
    if (!store.CanAnchor(a, id, a == tree.root())) continue;
    std::tuple<bool, int, int> rank{IsRefLink(store, a, id), tree.Recency(a), a};
    if (!best || rank > best_rank) {
      best = a;
      best_rank = rank;
    }
  }
  return best;
}

// Rank of a forgotten proposition as a linker towards `target`.
std::tuple<bool, int, int> LinkerRank(const LongTermStore& store, int linker,
                                      int target) {
  return {IsRefLink(store, linker, target), store.LastSeen(linker), linker};
}

}  // namespace

AttachResult Attach(MemoryTree& tree, std::span<const int> incoming,
                    LongTermStore& store, int cycle) {
  AttachResult result;
  tree.ClearRecalled();
  std::vector<int> pending(incoming.begin(), incoming.end());
  std::sort(pending.begin(), pending.end());
  if (pending.empty()) return result;

  const std::vector<int> before = tree.Nodes();
  const std::set<int> pre_existing(before.begin(), before.end());
  std::set<int> gained_children;

  auto insert = [&](int id, int parent) {
    tree.Insert(id, parent, cycle);
    store.MarkActive(id, cycle);
    if (pre_existing.count(parent)) gained_children.insert(parent);
  };
  auto recall = [&](int id, int parent) {
    tree.Insert(id, parent, cycle);
    tree.MarkRecalled(id);
    store.MarkActive(id, cycle);
    result.recalled.push_back(id);
  };

  if (tree.empty()) {
    // Start of a section: the proposition linked to most of its siblings
    // becomes the root.
    int best = pending.front();
    int best_links = -1;
    for (int p : pending) {
      int links = 0;
      for (int q : pending) {
        if (q != p && store.Shares(p, q)) ++links;
      }
      if (links > best_links) {
        best = p;
        best_links = links;
      }
    }
    tree.SetRoot(best, cycle);
    store.MarkActive(best, cycle);
    pending.erase(std::find(pending.begin(), pending.end(), best));
  }

  int recalls_left = kMaxRecallsPerCycle;
  while (!pending.empty()) {
    bool progress = false;
    std::vector<int> still_pending;
    for (int p : pending) {
      if (std::optional<int> anchor = BestAnchor(tree, store, p)) {
        insert(p, *anchor);
        progress = true;
      } else {
        still_pending.push_back(p);
      }
    }
    pending = std::move(still_pending);
    if (pending.empty() || progress) continue;

    // Nothing fits: look for forgotten propositions bridging the gap.
    bool recalled = false;
    for (int p : pending) {
      if (recalls_left == 0) break;
      std::optional<int> linker;
      for (int l : store.forgotten()) {
        if (tree.Contains(l) || !store.Shares(l, p)) continue;
        if (!BestAnchor(tree, store, l)) continue;
        if (!linker || LinkerRank(store, l, p) > LinkerRank(store, *linker, p)) {
          linker = l;
        }
      }
      if (linker) {
        recall(*linker, *BestAnchor(tree, store, *linker));
        --recalls_left;
        recalled = true;
        break;
      }
      if (recalls_left < 2) continue;
      // Two-step chain: tree - first - second - p.
      std::optional<std::pair<int, int>> chain;
      for (int second : store.forgotten()) {
        if (tree.Contains(second) || !store.Shares(second, p)) continue;
        for (int first : store.forgotten()) {
          if (first == second || tree.Contains(first)) continue;
          if (!store.CanAnchor(first, second, false)) continue;
          if (!BestAnchor(tree, store, first)) continue;
          if (!chain ||
              std::make_pair(LinkerRank(store, second, p),
                             LinkerRank(store, first, second)) >
                  std::make_pair(LinkerRank(store, chain->second, p),
                                 LinkerRank(store, chain->first, chain->second))) {
            chain = std::make_pair(first, second);
          }
        }
      }
      if (chain) {
        recall(chain->first, *BestAnchor(tree, store, chain->first));
        recall(chain->second, chain->first);
        recalls_left -= 2;
        recalled = true;
        break;
      }
    }
    if (recalled) continue;

    // Unconnected: hang the lowest pending id under the root.
    insert(pending.front(), tree.root());
    pending.erase(pending.begin());
  }

  if (gained_children.size() == 1 && *gained_children.begin() != tree.root()) {
    tree.RotateTo(*gained_children.begin());
    result.rerooted = true;
  }
  return result;
}

std::set<int> PruneLeadingEdge(MemoryTree& tree, int limit,
                               LongTermStore& store) {
  if (limit < 1) throw ConfigError("memory limit must be at least 1");
  const std::vector<int> nodes = tree.Nodes();
  std::set<int> keep(nodes.begin(), nodes.end());
  if (tree.size() <= limit) return keep;

  std::vector<int> path{tree.root()};
  while (true) {
    std::vector<int> children = tree.Children(path.back());
    if (children.empty()) break;
    int next = children.front();
    for (int c : children) {
      if (std::make_pair(tree.Recency(c), c) >
          std::make_pair(tree.Recency(next), next)) {
        next = c;
      }
    }
    path.push_back(next);
  }

  keep.clear();
  if (static_cast<int>(path.size()) >= limit) {
    keep.insert(path.begin(), path.begin() + limit);
  } else {
    keep.insert(path.begin(), path.end());
    const std::map<int, int> depth = tree.Depths();
    std::vector<int> rest;
    for (int n : nodes) {
      if (!keep.count(n)) rest.push_back(n);
    }
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
      return std::make_tuple(-depth.at(a), tree.Recency(a), a) >
             std::make_tuple(-depth.at(b), tree.Recency(b), b);
    });
    for (int n : rest) {
      if (static_cast<int>(keep.size()) >= limit) break;
      keep.insert(n);
    }
  }
  for (int n : nodes) {
    if (!keep.count(n)) store.MarkForgotten(n);
  }
  tree.Retain(keep);
  return keep;
}

void Reroot(MemoryTree& tree, const LongTermStore& store) {
  if (tree.empty()) return;
  const std::vector<int> nodes = tree.Nodes();
  auto score = [&](int n) {
    const Proposition& p = store.Get(n);
    int refs = 0;
    for (int m : nodes) {
      if (m != n && p.References(m)) ++refs;
    }
    return refs;
  };
  int best = tree.root();
  int best_score = score(best);
  for (int n : nodes) {
    int s = score(n);
    if (s > best_score) {
      best = n;
      best_score = s;
    }
  }
  tree.RotateTo(best);
}

std::vector<Occurrence> RecordOccurrences(const MemoryTree& tree, int cycle,
                                          SectionKind section) {
  std::vector<Occurrence> out;
  const std::map<int, int> depth = tree.Depths();
  const std::map<int, int> subtree = tree.SubtreeSizes();
  for (int n : tree.Nodes()) {
    out.push_back(Occurrence{n, cycle, section, depth.at(n), tree.Degree(n),
                             subtree.at(n)});
  }
  return out;
}

std::set<int> CycleSnapshot::NodeIds() const {
  std::set<int> ids;
  for (const NodeRecord& n : nodes) ids.insert(n.id);
  return ids;
}

SimulationTrace RunSimulation(const Document& doc,
                              std::span<const Proposition> props,
                              int memory_limit) {
  if (memory_limit < 1) throw ConfigError("memory limit must be at least 1");
  SimulationTrace trace;
  trace.article_id = doc.id;
  trace.memory_limit = memory_limit;

  std::map<int, std::vector<int>> by_sentence;
  for (const Proposition& p : props) by_sentence[p.sentence_id].push_back(p.id);

  LongTermStore store(props);
  MemoryTree tree;
  int cycle = 0;
  for (const SectionSpan& section : doc.sections) {
    for (int n : tree.Nodes()) store.MarkForgotten(n);
    tree.Clear();
    for (int s = section.begin; s < section.end; ++s) {
      ++cycle;
      auto it = by_sentence.find(s);
      if (it != by_sentence.end() && !it->second.empty()) {
        AttachResult attached = Attach(tree, it->second, store, cycle);
        for (int r : attached.recalled) trace.recalls.push_back({cycle, r});
        PruneLeadingEdge(tree, memory_limit, store);
        Reroot(tree, store);
      } else {
        tree.ClearRecalled();
      }

      std::vector<Occurrence> occ =
          RecordOccurrences(tree, cycle, section.kind);
      CycleSnapshot snap;
      snap.cycle = cycle;
      snap.section = section.kind;
      snap.sentence_id = s;
      snap.root = tree.root();
      for (const Occurrence& o : occ) {
        snap.nodes.push_back(NodeRecord{o.prop_id, tree.Parent(o.prop_id),
                                        o.depth, o.degree, o.subtree_size,
                                        tree.IsRecalled(o.prop_id)});
      }
      trace.cycles.push_back(std::move(snap));
      trace.occurrences.insert(trace.occurrences.end(), occ.begin(), occ.end());
    }
  }
  for (const Proposition& p : props) {
    trace.forgotten[p.id] = !tree.Contains(p.id);
  }
  return trace;
}

std::string TraceToJson(const SimulationTrace& trace) {
  using nlohmann::ordered_json;
  ordered_json cycles = ordered_json::array();
  for (const CycleSnapshot& c : trace.cycles) {
    ordered_json nodes = ordered_json::array();
    for (const NodeRecord& n : c.nodes) {
      nodes.push_back(ordered_json{{"id", n.id},
                                   {"parent", n.parent},
                                   {"depth", n.depth},
                                   {"degree", n.degree},
                                   {"subtree", n.subtree},
                                   {"recalled", n.recalled}});
    }
    ordered_json cyc{{"cycle", c.cycle},
                     {"section", SectionName(c.section)},
                     {"sentence_id", c.sentence_id}};
    cyc["root"] = c.root == 0 ? ordered_json(nullptr) : ordered_json(c.root);
    cyc["nodes"] = std::move(nodes);
    cycles.push_back(std::move(cyc));
  }
  ordered_json out{{"article_id", trace.article_id},
                   {"memory_limit", trace.memory_limit},
                   {"cycles", std::move(cycles)}};
  return out.dump(2) + "\n";
}

}  // namespace kvdsum
