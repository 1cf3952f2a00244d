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

#include <utility>

#include "atomwg/types.hpp"

namespace awg {

/// Flat ordering of unordered pairs (i < j) of M emitters.
class PairIndex {
 public:
  explicit PairIndex(int m) : m_(m) {}
  int n_emitters() const { return m_; }
  long size() const { return static_cast<long>(m_) * (m_ - 1) / 2; }
  long index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<long>(i) * m_ - static_cast<long>(i) * (i + 1) / 2 + (j - i - 1);
  }
  std::pair<int, int> pair(long idx) const;

 private:
  int m_;
};

/// Pure state in the ground (0), single- (1) or two-excitation (2) manifold.
/// Amplitudes are unnormalized under no-jump evolution.
///   manifold 0: one amplitude
///   manifold 1: one amplitude per emitter
///   manifold 2: one amplitude per pair i < j, in PairIndex order
struct State {
  int manifold = 1;
  int n_emitters = 0;
  CVector amplitudes;

  double norm_sq() const { return amplitudes.squaredNorm(); }
  /// Excited-state population of each emitter.
  RVector site_populations() const;
};

State ground_state(int n_emitters);
State single_excitation(const CVector& amplitudes);
State excite_site(int n_emitters, int site);
State excite_pair(int n_emitters, int i, int j);
State pair_state(int n_emitters, const CVector& pair_amplitudes);

/// Symmetric M x M matrix with zero diagonal holding pair amplitudes.
CMatrix pair_matrix(const State& s);
/// Upper triangle of a symmetric matrix packed into pair order.
CVector pack_pairs(const CMatrix& c);

}  // namespace awg
