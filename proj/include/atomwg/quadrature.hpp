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

#include <functional>

#include "atomwg/types.hpp"

namespace awg {

struct QuadratureResult {
  cplx value;
  double error_estimate = 0.0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = false;
};

/// Globally adaptive 15-point Gauss-Kronrod integration of a complex
/// integrand on [a, b]. Stops when the summed error estimate falls below
/// max(abs_tol, rel_tol * |value|) or max_intervals is reached.
QuadratureResult integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol = 0.0,
                                    int max_intervals = 4000);

}  // namespace awg
