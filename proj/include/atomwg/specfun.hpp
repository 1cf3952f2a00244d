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

/// Polylogarithm Li_s(z) for s in {1, 2, 3} on the closed unit disk.
///
/// Li_1(z) = -log(1 - z) on the principal branch. For s = 2, 3 the direct
/// power series is used for |z| <= 0.5; elsewhere the expansion in
/// mu = log z,
///
///   Li_s(e^mu) = sum_{k != s-1} zeta(s - k) mu^k / k!
///              + mu^{s-1} / (s-1)! (H_{s-1} - log(-mu)),
///
/// converges geometrically for |mu| < 2 pi and is uniform up to |z| = 1.
/// Throws Error(domain) for |z| > 1 + 1e-12 and Error(singularity) for
/// Li_1(1).
cplx polylog(int s, cplx z);

/// Riemann zeta at integers >= 2.
double zeta_int(int n);

/// Hankel function of the first kind H_m^(1)(x), m in {0, 1}, for x real
/// positive or purely imaginary with positive imaginary part. On the
/// imaginary axis H_0(it) = (2 / i pi) K_0(t) and H_1(it) = -(2/pi) K_1(t).
cplx hankel1(int m, cplx x);

/// Transverse wavenumber sqrt(k^2 - q^2) on the branch Im >= 0, Re >= 0.
cplx transverse_wavenumber(double k, double q);

}  // namespace awg
