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

// Helpers shared by the scenario implementations.

#include <functional>
#include <string>
#include <vector>

#include "atomwg/config.hpp"
#include "atomwg/model.hpp"
#include "atomwg/scenarios.hpp"

namespace awg::detail {

/// Runs body(i) for i in [0, n) on up to `threads` workers with strided
/// assignment; the first exception is rethrown.
void parallel_for(int n, int threads, const std::function<void(int)>& body);

std::vector<double> linspace(double a, double b, int n);

/// Qubits from the "qubits" array.
std::vector<ImpurityQubit> qubits_from_config(const json& cfg, double d);

/// Maxima found with hysteresis: a peak counts once the signal has risen by
/// at least min_prominence from the preceding minimum and fallen by as much
/// after it.
std::vector<int> local_maxima(const std::vector<double>& y, double min_prominence);

void log(const RunContext& ctx, const std::string& msg);

// Registration hooks, one per source file.
void register_guided_scenarios(std::vector<ScenarioInfo>& out);
void register_dynamics_scenarios(std::vector<ScenarioInfo>& out);

}  // namespace awg::detail
