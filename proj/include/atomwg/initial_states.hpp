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

#include <string>
#include <vector>

#include "atomwg/geometry.hpp"
#include "atomwg/states.hpp"

namespace awg {

struct PreparedState {
  State state;
  bool truncated = false;  // envelope weight beyond the chain ends > 1%
  std::vector<std::string> warnings;
};

/// Gaussian spin wave c_i ~ exp(-i k1d zb_i) exp(-zb_i^2 / zeta^2) with
/// zb_i = z_i - center, on the chain atoms of a model with `n_total`
/// emitters (extra emitters start empty). Positive k1d moves towards -z.
PreparedState init_spin_wave(const ChainGeometry& chain, double k1d, double zeta, double center,
                             int n_total = -1);

/// Two counter-propagating packets, c_ab ~ f(a, b) + f(b, a) with
/// f(a, b) = exp(i k1d (zb_a - zb_b)) exp(-(zb_a^2 + zb_b^2) / zeta^2),
/// zb_a measured from centers[0] and zb_b from centers[1]. For
/// centers[0] < centers[1] and k1d > 0 the packets move towards each other.
PreparedState init_two_photon(const ChainGeometry& chain, double k1d, double zeta,
                              std::pair<double, double> centers, int n_total = -1);

/// Frequency content of a single-excitation chain packet: weights
/// |sum_j c_j e^{i k z_j}|^2 on n points of k in [k_center - halfwidth,
/// k_center + halfwidth], paired with the guided-band detuning Re omega(k).
struct PacketSpectrum {
  std::vector<double> k;
  std::vector<double> delta;
  std::vector<double> weight;  // sums to 1
  double mean_delta = 0.0;
};

PacketSpectrum packet_spectrum(const State& s, const ChainGeometry& chain, double k_center,
                               double halfwidth, int n = 401);

}  // namespace awg
