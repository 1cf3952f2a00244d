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

#include <optional>
#include <string>
#include <vector>

#include "atomwg/propagate.hpp"

namespace awg {

RVector site_populations(const State& s);
RVector qubit_populations(const State& s, const EffectiveModel& model);
double total_excited_population(const State& s);
/// Weight in the two-excitation manifold (0 for other manifolds).
double two_exc_population(const State& s);

/// (P_L - P_R) / (P_L + P_R) over chain atoms left / right of qubit q.
/// Empty when the denominator is below 1e-15.
std::optional<double> chirality(const State& s, const EffectiveModel& model, int qubit);

/// Positive-frequency field amplitude sum_j G0(r, r_j) d_j sqrt(gamma_j) c_j
/// of a single-excitation state, up to a global constant.
CVec3 field_expectation(const State& s, const EffectiveModel& model, const Vec3& r);

/// Named population groups.
struct PopulationGroup {
  std::string name;
  std::vector<int> sites;
};

/// Columns: norm, total, two_exc, then one per group.
Observer population_observer(std::vector<PopulationGroup> groups);
/// Adds one group per qubit named q<k>.
std::vector<PopulationGroup> qubit_groups(const EffectiveModel& model);
/// One group per emitter named pop_<i>.
std::vector<PopulationGroup> site_groups(int n_emitters);

}  // namespace awg
