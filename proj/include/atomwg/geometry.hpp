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

#include "atomwg/types.hpp"

namespace awg {

/// Point-dipole emitter as seen by the coupling matrices.
struct Emitter {
  Vec3 position = Vec3::Zero();
  CVec3 dipole = CVec3(0, 0, 1);  // unit vector
  double gamma0 = 1.0;            // bare linewidth
  double detuning = 0.0;          // resonance minus chain resonance
};

/// Cylindrical coordinates around the chain axis.
struct CylPosition {
  double rho = 0.0;
  double phi = 0.0;
  double z = 0.0;

  Vec3 cartesian() const;
};

CVec3 unit_z_dipole();

/// Normalizes a dipole; throws if its norm is zero.
CVec3 normalized_dipole(const CVec3& d);

/// Equally spaced chain of identical two-level atoms on the z axis,
/// z_j = j * spacing.
class ChainGeometry {
 public:
  ChainGeometry(int n_atoms, double spacing, CVec3 polarization = unit_z_dipole());

  int n_atoms() const { return n_atoms_; }
  double spacing() const { return spacing_; }
  const CVec3& polarization() const { return polarization_; }

  Vec3 atom_position(int j) const { return Vec3(0.0, 0.0, j * spacing_); }
  std::vector<Vec3> atom_positions() const;
  std::vector<Emitter> emitters() const;

  /// z coordinate of the chain midpoint.
  double center_z() const { return 0.5 * (n_atoms_ - 1) * spacing_; }

 private:
  int n_atoms_;
  double spacing_;
  CVec3 polarization_;
};

/// Additional emitter placed next to the chain.
struct ImpurityQubit {
  double rho_q = 0.1;
  double phi_q = 0.0;
  double z_q = 0.0;
  CVec3 dipole = CVec3(0, 0, 1);
  double gamma0_q = 1.0;
  double detuning_q = 0.0;

  CylPosition cylindrical() const { return {rho_q, phi_q, z_q}; }
  Vec3 position() const { return cylindrical().cartesian(); }
  Emitter emitter() const;

  /// Throws Error(domain) unless rho_q > 0, gamma0_q > 0 and |dipole| = 1.
  void validate() const;
};

}  // namespace awg
