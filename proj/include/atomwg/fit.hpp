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

namespace awg {

/// y = offset + amplitude / (1 + (2 (x - center) / fwhm)^2)
struct LorentzianFit {
  double center = 0.0;
  double fwhm = 0.0;
  double amplitude = 0.0;
  double offset = 0.0;
  double residual = 0.0;  // l2 norm of the residual vector
  int iterations = 0;
  bool converged = false;
};

/// Levenberg-Marquardt; stops when the relative parameter change drops below
/// 1e-10 or after 200 iterations (then converged = false, best parameters
/// returned). Needs >= 8 points.
LorentzianFit fit_lorentzian(const std::vector<double>& x, const std::vector<double>& y);

/// Same model averaged over a known instrument spread: the Lorentzian is
/// evaluated at x + shift[m] and weighted by weight[m] (normalized here).
/// Used when the probe itself has a finite bandwidth.
LorentzianFit fit_lorentzian_broadened(const std::vector<double>& x, const std::vector<double>& y,
                                       const std::vector<double>& shift,
                                       const std::vector<double>& weight);

/// y = A x^B by least squares in log-log coordinates.
struct PowerLawFit {
  double prefactor = 0.0;
  double exponent = 0.0;
  double exponent_stderr = 0.0;
  double residual = 0.0;  // l2 norm in log space
};

/// Needs >= 4 points, all x and y positive.
PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

/// y = A exp(-rate x), least squares on log y. Needs >= 2 positive points.
struct ExponentialFit {
  double prefactor = 0.0;
  double rate = 0.0;
  double rate_stderr = 0.0;
};

ExponentialFit fit_exponential(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace awg
