// Copyright 2026 The atomwg Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "atomwg/scenarios.hpp"

namespace awg {

/// ATOMWG_THREADS if set and positive, else the hardware concurrency.
int default_threads();

struct RunOptions {
  std::filesystem::path out_dir = ".";
  TableFormat format = TableFormat::csv;
  std::optional<std::uint64_t> seed;  // overrides /evolution/seed
  int threads = 1;
  std::string stem;  // output file stem; defaults to the scenario name
  std::function<void(const std::string&)> log;
};

/// Copy of `cfg` with the seed override applied where the scenario has one.
json apply_overrides(const json& cfg, const RunOptions& opt);

/// Runs one config and writes <stem>.<ext> plus <stem>.<name>.<ext> for side
/// tables. Returns the written paths.
std::vector<std::filesystem::path> run_to_files(const json& cfg, const RunOptions& opt);

/// Expands /sweep (JSON pointer -> array of values) into the cartesian grid,
/// writes <stem>_<i>.<ext> per point and <stem>_index.<ext>.
std::vector<std::filesystem::path> sweep_to_files(const json& cfg, const RunOptions& opt);

/// The grid points of a sweep as complete configs (without /sweep).
std::vector<json> expand_sweep(const json& cfg);

}  // namespace awg
