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

#include "atomwg/types.hpp"

namespace awg {

/// Bloch-mode quantities of the infinite chain polarized along its axis.
/// All frequencies are complex detunings from the atomic resonance, in units
/// of the single-atom linewidth, evaluated at k = k0.
struct GuidedModePoint {
  double k_z = 0.0;
  cplx delta;
  double v_g = 0.0;
};

/// Closed-form complex band, including the -i/2 self-decay term of the j = 0
/// site so that the guided branch |k_z| > k0 is lossless.
cplx omega_of_kz(double k_z, double d);

/// Real-space lattice sum of the same quantity for an arbitrary unit
/// polarization, truncated symmetrically at |j| <= n_terms.
cplx omega_of_kz_sum(double k_z, double d, long n_terms, const CVec3& polarization = CVec3(0, 0, 1));

/// d Re(omega)/d k_z from the analytic derivative of the polylog form.
/// Throws Error(domain) inside the light cone (|k_z| <= k0).
double group_velocity(double k_z, double d);

/// Complex d omega / d k_z, valid anywhere except the light line.
cplx omega_derivative(double k_z, double d);

struct K1dRoot {
  double k1d = 0.0;
  int multiplicity = 0;
};

/// Guided wavevector k0 < k <= pi/d with Re omega(k) = delta. When several
/// roots exist the largest one is returned and the count is reported.
/// Throws Error(out_of_band) when delta has no guided mode.
K1dRoot find_k1d(double delta, double d, int n_scan = 2000);

struct BandEdges {
  double delta_lightline = 0.0;
  double delta_zone_edge = 0.0;
  double delta_min = 0.0;
  double delta_max = 0.0;
};

/// Guided band limits over k0 < k_z <= pi/d.
BandEdges band_edges(double d, int n_scan = 4000);

void validate_spacing(double d);

}  // namespace awg
