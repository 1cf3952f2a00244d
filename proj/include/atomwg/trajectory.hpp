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

#include "atomwg/propagate.hpp"

namespace awg {

/// SplitMix64; trajectory i of an ensemble is seeded with seed ^ i.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in the open interval (0, 1).
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct TrajectoryOptions {
  PropagationOptions propagation;
  bool jumps = true;  // false reproduces propagate_no_jump
};

/// One Monte-Carlo wavefunction trajectory. With jumps enabled, observers
/// see the normalized state.
TrajectoryRecord sample_trajectory(const State& initial, const EffectiveModel& model,
                                   const std::vector<double>& t_grid, std::uint64_t seed,
                                   const Observer& observer, const TrajectoryOptions& options = {});

struct EnsembleResult {
  std::vector<double> times;
  std::vector<std::string> names;
  std::vector<std::vector<double>> mean;
  std::vector<std::vector<double>> std_error;
  int n_trajectories = 0;
  long n_jumps = 0;
  std::uint64_t seed = 0;

  ResultTable to_table() const;
};

/// Runs n trajectories on `threads` workers; the reduction is independent
/// of scheduling.
EnsembleResult run_ensemble(const State& initial, const EffectiveModel& model,
                            const std::vector<double>& t_grid, std::uint64_t seed, int n,
                            const Observer& observer, int threads,
                            const TrajectoryOptions& options = {});

}  // namespace awg
