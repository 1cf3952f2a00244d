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

#include "atomwg/geometry.hpp"

#include <cmath>

namespace awg {

const char* to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::domain: return "domain";
    case ErrorCategory::singularity: return "singularity";
    case ErrorCategory::out_of_band: return "out_of_band";
    case ErrorCategory::numerical: return "numerical";
    case ErrorCategory::size: return "size";
    case ErrorCategory::config: return "config";
    case ErrorCategory::io: return "io";
    case ErrorCategory::unknown_scenario: return "unknown_scenario";
  }
  return "unknown";
}

Vec3 CylPosition::cartesian() const {
  return Vec3(rho * std::cos(phi), rho * std::sin(phi), z);
}

CVec3 unit_z_dipole() { return CVec3(0.0, 0.0, 1.0); }

CVec3 normalized_dipole(const CVec3& d) {
  const double n = d.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCategory::domain, "dipole vector has zero or non-finite norm");
  }
  return d / n;
}

ChainGeometry::ChainGeometry(int n_atoms, double spacing, CVec3 polarization)
    : n_atoms_(n_atoms), spacing_(spacing), polarization_(std::move(polarization)) {
  if (n_atoms_ < 1) {
    throw Error(ErrorCategory::domain, "chain needs at least one atom");
  }
  if (!(spacing_ > 0.0 && spacing_ < 0.5)) {
    throw Error(ErrorCategory::domain,
                "chain spacing must lie in (0, 0.5) wavelengths for guided modes");
  }
  if (std::abs(polarization_.norm() - 1.0) > 1e-12) {
    throw Error(ErrorCategory::domain, "chain polarization must be a unit vector");
  }
}

std::vector<Vec3> ChainGeometry::atom_positions() const {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(n_atoms_));
  for (int j = 0; j < n_atoms_; ++j) out.push_back(atom_position(j));
  return out;
}

std::vector<Emitter> ChainGeometry::emitters() const {
  std::vector<Emitter> out;
  out.reserve(static_cast<std::size_t>(n_atoms_));
  for (int j = 0; j < n_atoms_; ++j) {
    out.push_back(Emitter{atom_position(j), polarization_, 1.0, 0.0});
  }
  return out;
}

Emitter ImpurityQubit::emitter() const {
  return Emitter{position(), dipole, gamma0_q, detuning_q};
}

void ImpurityQubit::validate() const {
  if (!(rho_q > 0.0)) throw Error(ErrorCategory::domain, "qubit rho must be positive");
  if (!(gamma0_q > 0.0)) throw Error(ErrorCategory::domain, "qubit linewidth must be positive");
  if (std::abs(dipole.norm() - 1.0) > 1e-12) {
    throw Error(ErrorCategory::domain, "qubit dipole must be a unit vector");
  }
}

}  // namespace awg
