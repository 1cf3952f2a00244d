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

#include <memory>
#include <vector>

#include "atomwg/geometry.hpp"

namespace awg {

/// Eigen-decomposition of the dissipation matrix. Column nu of `vectors` is
/// v_nu; the jump operator is O_nu = sum_j conj(v_nu(j)) sigma_ge^j with
/// rate `rates(nu)`.
struct JumpBasis {
  RVector rates;
  CMatrix vectors;
};

/// Non-Hermitian single-excitation Hamiltonian of chain atoms followed by
/// qubits, H_ij = J_ij - i Gamma_ij / 2.
///
/// The chain block is Toeplitz and is applied through an FFT circulant
/// embedding, so chains of several thousand atoms never form a dense
/// M x M matrix. Emitters passed without a chain structure go into a dense
/// block. Dense H, Gamma and the jump basis are built lazily on request.
class EffectiveModel {
 public:
  EffectiveModel(const ChainGeometry& chain, const std::vector<ImpurityQubit>& qubits);
  explicit EffectiveModel(std::vector<Emitter> emitters);
  ~EffectiveModel();
  EffectiveModel(EffectiveModel&&) noexcept;
  EffectiveModel& operator=(EffectiveModel&&) noexcept;

  int size() const { return n_chain_ + n_extra_; }
  int n_chain() const { return n_chain_; }
  int n_extra() const { return n_extra_; }
  /// Index of qubit q in the emitter ordering.
  int qubit_index(int q) const { return n_chain_ + q; }
  double spacing() const { return spacing_; }
  const std::vector<Emitter>& emitters() const { return emitters_; }

  cplx element(int i, int j) const;

  /// y = H x.
  void apply(const CVector& x, CVector& y) const;
  /// Y = H X (columnwise).
  void apply_block(const CMatrix& x, CMatrix& y) const;

  /// Gershgorin bound on the spectral radius of H.
  double norm_bound() const { return norm_bound_; }

  const CMatrix& dense_hamiltonian() const;
  CMatrix dense_gamma() const;
  /// Throws Error(numerical) if Gamma has an eigenvalue below -1e-10.
  const JumpBasis& jump_basis() const;

 private:
  struct Impl;
  void finish_setup();

  std::vector<Emitter> emitters_;
  int n_chain_ = 0;
  int n_extra_ = 0;
  double spacing_ = 0.0;
  double norm_bound_ = 0.0;
  std::unique_ptr<Impl> impl_;
};

EffectiveModel build_model(const ChainGeometry& chain, const std::vector<ImpurityQubit>& qubits);
EffectiveModel build_model(std::vector<Emitter> emitters);

}  // namespace awg
