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

#include "atomwg/propagate.hpp"

namespace awg {

/// Master-equation reference on the full 2^M space (M <= 4), RK4 with
/// dt = 1e-3. Columns: pop_<i> per emitter, total, trace.
TrajectoryRecord lindblad_reference(const EffectiveModel& model, const State& initial,
                                    const std::vector<double>& t_grid, double dt = 1e-3);

}  // namespace awg
