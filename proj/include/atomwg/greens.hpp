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

#include <span>

#include "atomwg/geometry.hpp"

namespace awg {

/// Vacuum dyadic Green's tensor between two distinct points,
///
///   G0 = e^{ix} / (4 pi R) [ (1 + (ix - 1)/x^2) 1 + (-1 + (3 - 3ix)/x^2) Rhat Rhat ],
///
/// with R = |ra - rb| and x = k R. Throws Error(singularity) for ra == rb.
CMat3 greens_free(const Vec3& ra, const Vec3& rb, double k = kK0);

/// dl^* . G0(ra, rb) . dr without forming the tensor.
cplx greens_sandwich(const Vec3& ra, const Vec3& rb, const CVec3& dl, const CVec3& dr,
                     double k = kK0);

/// Finite imaginary part of G0 at coincident points, (k / 6 pi) * identity.
CMat3 coincident_greens_imag(double k = kK0);

struct InteractionMatrices {
  CMatrix J;      // coherent exchange, diagonal = detunings
  CMatrix Gamma;  // dissipative rates, diagonal = bare linewidths
};

/// Coherent and dissipative pair rates for a set of emitters:
///   J_ij     = -(3 pi sqrt(g_i g_j) / k) d_i^* . Re G0(r_i, r_j) . d_j
///   Gamma_ij =  (6 pi sqrt(g_i g_j) / k) d_i^* . Im G0(r_i, r_j) . d_j
/// Both are Hermitian and real symmetric when every dipole is real.
InteractionMatrices interaction_matrices(std::span<const Emitter> emitters, double k = kK0);

/// Full non-Hermitian coupling element J_ij - i Gamma_ij / 2 for i != j.
cplx coupling_element(const Emitter& a, const Emitter& b, double k = kK0);

}  // namespace awg
