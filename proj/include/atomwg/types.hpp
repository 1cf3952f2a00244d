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

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

// Natural units throughout the library: the chain-atom linewidth is 1, the
// chain-atom resonance wavelength is 1, hbar = 1. Times are in units of the
// inverse chain-atom linewidth and every frequency is stored as a detuning
// from the chain-atom resonance.
namespace awg {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Resonant wavenumber of the chain atoms, 2*pi / lambda0 with lambda0 = 1.
inline constexpr double kK0 = 2.0 * kPi;

enum class ErrorCategory {
  domain,        // argument outside the mathematical domain
  singularity,   // evaluation at a pole or branch point
  out_of_band,   // frequency has no guided mode (bandgap)
  numerical,     // non-convergence or instability
  size,          // problem too large for the requested method
  config,        // malformed or invalid configuration
  io,
  unknown_scenario,
};

const char* to_string(ErrorCategory c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

}  // namespace awg
