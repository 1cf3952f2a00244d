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

#include <vector>

#include "atomwg/geometry.hpp"
#include "atomwg/result_table.hpp"

namespace awg {

/// Field mode function of the infinite chain (atoms polarized along z) at one
/// point, in cylindrical components. The azimuthal component vanishes.
struct ModeSample {
  cplx rho;
  cplx phi;
  cplx z;
  double k_z = 0.0;
  CylPosition position;
  int n_shells = 0;  // Umklapp shells |n| <= n_shells summed
  bool converged = false;

  CVec3 cartesian() const;
};

/// u_{k_z}(r): sum over reciprocal vectors g = 2 pi n / d of
/// [1 + grad grad / k^2] z e^{i(k_z+g)z} H_0(k_perp rho). Starts from
/// |n| <= n_umklapp and adds shells until one changes the result by less
/// than 1e-10 relative, up to |n| = 200.
ModeSample mode_u(double k_z, const CylPosition& pos, double d, int n_umklapp = 1);

/// v_{k_z}(r): the same sum with conjugate Bloch phase. Beyond the light
/// line v = -u^* component by component.
ModeSample mode_v(double k_z, const CylPosition& pos, double d, int n_umklapp = 1);

/// d^* . u for a Cartesian dipole.
cplx project_conj(const CVec3& dipole, const ModeSample& m);
/// v . d for a Cartesian dipole.
cplx project_plain(const ModeSample& m, const CVec3& dipole);

/// Emission into the guided mode, in units of the qubit's bare linewidth.
/// right uses the +k1D pole (v_g > 0), left the -k1D pole.
struct GuidedRate {
  double total = 0.0;
  double left = 0.0;
  double right = 0.0;
  bool bandgap = false;
  double k1d = 0.0;
  double v_g = 0.0;
  int root_multiplicity = 0;
};

GuidedRate gamma_guided(const ImpurityQubit& qubit, double d, double delta);

struct FreeSpaceRate {
  double rate = 0.0;            // in units of the qubit's bare linewidth
  double quadrature_error = 0.0;
  int evaluations = 0;
};

/// Free-space emission rate including the chain's radiative (|k_z| < k)
/// contribution; the integral uses k_z = k sin(theta). Throws
/// Error(numerical) if the quadrature does not converge.
FreeSpaceRate gamma_free_space_detail(const ImpurityQubit& qubit, double d, double delta);
double gamma_free_space(const ImpurityQubit& qubit, double d, double delta);

/// Chain-induced frequency shift of the qubit in units of its bare linewidth
/// (principal value across the guided poles, taken by folding the integrand
/// symmetrically about each pole).
double coherent_shift(const ImpurityQubit& qubit, double d, double delta);

struct CouplingRates {
  double gamma_1d = 0.0;
  double gamma_free = 0.0;
  double optical_depth = 0.0;
  double shift = 0.0;
  bool has_shift = false;
  double gamma_left = 0.0;
  double gamma_right = 0.0;
};

CouplingRates coupling_rates(const ImpurityQubit& qubit, double d, double delta,
                             bool with_shift = false);

/// Guided-band detuning whose wavevector is k1d.
double delta_for_k1d(double k1d, double d);

/// Dense (rho, z) map of free-space and guided rates and their ratio.
ResultTable scan_decay_rates(double d, double delta, const std::vector<double>& rho_grid,
                             const std::vector<double>& z_grid,
                             const CVec3& dipole = CVec3(0, 0, 1), int threads = 1);

struct MagicPoint {
  double rho = 0.0;
  double z = 0.0;
  double gamma_free = 0.0;
  double optical_depth = 0.0;
};

/// Minimum of the free-space rate over rho in [0.2d, 1.5d] and the unit
/// cell in z, by a coarse grid followed by golden-section refinement.
MagicPoint find_magic_point(double d, double delta, const CVec3& dipole = CVec3(0, 0, 1));

}  // namespace awg
