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
#include <vector>

#include "atomwg/model.hpp"
#include "atomwg/result_table.hpp"
#include "atomwg/states.hpp"

namespace awg {

/// (H c)_{ij} = sum_{m != j} H_im c_mj + sum_{m != i} H_jm c_im on the
/// hard-core pair basis.
State apply_hamiltonian_two_exc(const State& s, const EffectiveModel& model);

/// H acting within the state's manifold.
State apply_hamiltonian(const State& s, const EffectiveModel& model);

enum class PropagationMethod { eigen, rk4, krylov };

PropagationMethod parse_method(const std::string& s);
const char* to_string(PropagationMethod m);

struct PropagationOptions {
  PropagationMethod method = PropagationMethod::krylov;
  double rk4_dt = 0.0;        // 0: 0.01 / norm_bound
  int krylov_dim = 30;
  double krylov_tol = 1e-10;  // local error per unit time
};

/// Named scalar functions of a state, evaluated on output grids.
struct Observer {
  std::vector<std::string> names;
  std::function<void(const State&, double* out)> eval;
};

struct JumpEvent {
  double time = 0.0;
  int channel = -1;
  int manifold_before = 0;
  int manifold_after = 0;
};

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;  // columns[k][t]
  std::vector<JumpEvent> jumps;
  std::uint64_t seed = 0;

  const std::vector<double>& column(const std::string& name) const;
  ResultTable to_table() const;
};

/// Advances a state under exp(-i H t) in its current manifold.
class Propagator {
 public:
  Propagator(const EffectiveModel& model, PropagationOptions options);
  ~Propagator();
  Propagator(const Propagator&) = delete;
  Propagator& operator=(const Propagator&) = delete;

  /// Evolves `s` by dt (>= 0). Norm growth above 1e-6 throws
  /// Error(numerical).
  void advance(State& s, double dt);

  /// Evolves until dt or until norm_sq first drops to `threshold`; returns
  /// the elapsed time. The crossing is located to 1e-9 by bisection.
  double advance_until_norm(State& s, double dt, double threshold);

  const EffectiveModel& model() const { return model_; }
  const PropagationOptions& options() const { return opt_; }

 private:
  struct Eigen1;
  const EffectiveModel& model_;
  PropagationOptions opt_;
  std::unique_ptr<Eigen1> eig_;
  double krylov_tau_[3] = {0.0, 0.0, 0.0};
};

/// Deterministic no-jump evolution sampled at `t_grid` (ascending, first
/// entry is the initial time). Observers see the unnormalized state.
TrajectoryRecord propagate_no_jump(const State& initial, const EffectiveModel& model,
                                   const std::vector<double>& t_grid, const Observer& observer,
                                   const PropagationOptions& options = {});

/// Uniform grid t0, t0 + dt, ..., t_end (inclusive within rounding).
std::vector<double> time_grid(double t_end, double dt, double t0 = 0.0);

}  // namespace awg
