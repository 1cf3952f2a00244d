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

#include "atomwg/propagate.hpp"

namespace awg {

State apply_hamiltonian_two_exc(const State& s, const EffectiveModel& model) {
  if (s.manifold != 2 || s.n_emitters != model.size()) {
    throw Error(ErrorCategory::domain, "two-excitation operator needs a pair state of matching size");
  }
  // With C symmetric and zero on the diagonal, (HC)_ij + (HC)_ji is exactly
  // the hard-core pair action.
  const CMatrix c = pair_matrix(s);
  CMatrix y;
  model.apply_block(c, y);
  const CMatrix r = y + y.transpose();
  State out = s;
  out.amplitudes = pack_pairs(r);
  return out;
}

State apply_hamiltonian(const State& s, const EffectiveModel& model) {
  switch (s.manifold) {
    case 0: {
      State out = s;
      out.amplitudes.setZero();
      return out;
    }
    case 1: {
      State out = s;
      model.apply(s.amplitudes, out.amplitudes);
      return out;
    }
    case 2:
      return apply_hamiltonian_two_exc(s, model);
    default:
      throw Error(ErrorCategory::domain, "unsupported excitation manifold");
  }
}

}  // namespace awg
