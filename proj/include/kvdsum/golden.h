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

#ifndef KVDSUM_GOLDEN_H_
#define KVDSUM_GOLDEN_H_

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "kvdsum/memory.h"

namespace kvdsum {

struct GoldenCycle {
  int cycle = 0;
  std::set<int> kept;
  int root = 0;
  std::set<int> recalled;
};

struct GoldenTrace {
  int memory_limit = 0;
  std::vector<GoldenCycle> cycles;
};

// The three reading cycles of the worked example at M = 5.
GoldenTrace WorkedExampleGoldenTrace();

// Reads the structural part (kept sets, roots, recall flags) of a trace dump
// such as fixtures/table1.trace.golden.json.
GoldenTrace LoadGoldenTrace(const std::filesystem::path& path);

struct GoldenCheck {
  bool ok = true;
  std::vector<std::string> diffs;  // e.g. "cycle 3 root: expected 11, got 8"
};

GoldenCheck VerifyGolden(const SimulationTrace& trace,
                         const GoldenTrace& golden);

}  // namespace kvdsum

#endif  // KVDSUM_GOLDEN_H_
