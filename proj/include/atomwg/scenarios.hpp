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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "atomwg/config.hpp"
#include "atomwg/result_table.hpp"

namespace awg {

struct RunContext {
  int threads = 1;
  std::function<void(const std::string&)> log;  // optional progress sink
};

struct ScenarioOutput {
  ResultTable table;
  std::vector<std::pair<std::string, ResultTable>> extra;  // named side tables
};

struct ScenarioInfo {
  std::string name;
  std::string summary;
  json defaults;  // complete config; also the validation template
  std::function<ScenarioOutput(const json& cfg, const RunContext& ctx)> run;
};

const std::vector<ScenarioInfo>& scenario_registry();

/// Throws Error(unknown_scenario) listing the registered names.
const ScenarioInfo& find_scenario(const std::string& name);

/// Defaults of the named scenario overlaid with the user config (objects
/// merge recursively, explicit nulls are kept), validated. The "sweep"
/// block is removed.
json resolve_config(const json& user);

/// Resolves, runs, and stamps metadata (config echo, version, seed, wall
/// time) onto every produced table.
ScenarioOutput run_scenario(const json& user_config, const RunContext& ctx = {});

}  // namespace awg
