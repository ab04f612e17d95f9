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

#include "kvdsum/golden.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kvdsum/errors.h"

namespace kvdsum {
namespace {

std::string Join(const std::set<int>& ids) {
  std::string out = "{";
  for (int id : ids) {
    if (out.size() > 1) out += ",";
    out += std::to_string(id);
  }
  return out + "}";
}

}  // namespace

GoldenTrace WorkedExampleGoldenTrace() {
  return GoldenTrace{5,
                     {{1, {2, 3, 4, 5, 7}, 4, {}},
                      {2, {7, 10, 11, 12, 13}, 10, {}},
                      {3, {8, 10, 11, 15, 16}, 11, {8}}}};
}

GoldenTrace LoadGoldenTrace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
    GoldenTrace g;
    g.memory_limit = j.at("memory_limit").get<int>();
    for (const auto& c : j.at("cycles")) {
      GoldenCycle gc;
      gc.cycle = c.at("cycle").get<int>();
      gc.root = c.at("root").is_null() ? 0 : c.at("root").get<int>();
      for (const auto& n : c.at("nodes")) {
        gc.kept.insert(n.at("id").get<int>());
        if (n.at("recalled").get<bool>()) gc.recalled.insert(n.at("id").get<int>());
      }
      g.cycles.push_back(std::move(gc));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

GoldenCheck VerifyGolden(const SimulationTrace& trace,
                         const GoldenTrace& golden) {
  GoldenCheck check;
  auto fail = [&check](std::string msg) {
    check.ok = false;
    check.diffs.push_back(std::move(msg));
  };
  if (trace.memory_limit != golden.memory_limit) {
    fail("memory limit: expected " + std::to_string(golden.memory_limit) +
         ", got " + std::to_string(trace.memory_limit));
  }
  if (trace.cycles.size() != golden.cycles.size()) {
    fail("cycle count: expected " + std::to_string(golden.cycles.size()) +
         ", got " + std::to_string(trace.cycles.size()));
  }
  const std::size_t n = std::min(trace.cycles.size(), golden.cycles.size());
  for (std::size_t i = 0; i < n; ++i) {
    const CycleSnapshot& got = trace.cycles[i];
    const GoldenCycle& want = golden.cycles[i];
    const std::string tag = "cycle " + std::to_string(want.cycle);
    const std::set<int> kept = got.NodeIds();
    if (kept != want.kept) {
      fail(tag + " kept set: expected " + Join(want.kept) + ", got " +
           Join(kept));
    }
    if (got.root != want.root) {
      fail(tag + " root: expected " + std::to_string(want.root) + ", got " +
           std::to_string(got.root));
    }
    std::set<int> recalled;
    for (const NodeRecord& node : got.nodes) {
      if (node.recalled) recalled.insert(node.id);
    }
    for (int id : want.recalled) {
      if (!recalled.count(id)) {
        fail(tag + " recall flag on " + std::to_string(id) + ": missing");
      }
    }
    for (int id : recalled) {
      if (!want.recalled.count(id)) {
        fail(tag + " recall flag on " + std::to_string(id) + ": unexpected");
      }
    }
  }
  return check;
}

}  // namespace kvdsum
