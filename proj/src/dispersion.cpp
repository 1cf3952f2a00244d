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

#include "atomwg/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "atomwg/specfun.hpp"

namespace awg {

void validate_spacing(double d) {
  if (!(d > 0.0 && d < 0.5)) {
    throw Error(ErrorCategory::domain, "lattice spacing must lie in (0, 0.5)");
  }
}

namespace {

void check_zone(double k_z, double d) {
  if (std::abs(k_z) > kPi / d * (1.0 + 1e-12)) {
    throw Error(ErrorCategory::domain, "k_z outside the first Brillouin zone");
  }
}

}  // namespace

cplx omega_of_kz(double k_z, double d) {
  validate_spacing(d);
  check_zone(k_z, d);
  const double k = kK0;
  const double kd = k * d;
  const cplx ep = std::exp(kI * ((k + k_z) * d));
  const cplx em = std::exp(kI * ((k - k_z) * d));
  const cplx bracket = polylog(3, ep) + polylog(3, em) - kI * kd * polylog(2, ep) -
                       kI * kd * polylog(2, em);
  return -1.5 / (kd * kd * kd) * bracket - 0.5 * kI;
}

cplx omega_derivative(double k_z, double d) {
  validate_spacing(d);
  check_zone(k_z, d);
  const double k = kK0;
  const double kd = k * d;
  const cplx ep = std::exp(kI * ((k + k_z) * d));
  const cplx em = std::exp(kI * ((k - k_z) * d));
  // d/dk_z Li_s(e^{i(k +- k_z)d}) = +- i d Li_{s-1}(...)
  const cplx bracket = kI * d * (polylog(2, ep) - polylog(2, em)) +
                       kd * d * (polylog(1, ep) - polylog(1, em));
  return -1.5 / (kd * kd * kd) * bracket;
}

double group_velocity(double k_z, double d) {
  if (std::abs(k_z) <= kK0) {
    throw Error(ErrorCategory::domain, "group velocity requested inside the light cone");
  }
  return omega_derivative(k_z, d).real();
}

cplx omega_of_kz_sum(double k_z, double d, long n_terms, const CVec3& polarization) {
  validate_spacing(d);
  if (n_terms < 1000) throw Error(ErrorCategory::domain, "lattice sum needs at least 1000 terms");
  const double k = kK0;
  const CVec3 p = polarization / polarization.norm();
  const double pp = p.squaredNorm();
  const double pz2 = std::norm(p(2));
  // Sites +j and -j share the radial factors; only the Bloch phase differs.
  cplx sum = 0.0;
  for (long j = n_terms; j >= 1; --j) {
    const double r = j * d;
    const double x = k * r;
    const double x2 = x * x;
    const cplx pref = std::exp(kI * x) / (4.0 * kPi * r);
    const cplx a = pref * (1.0 + (kI * x - 1.0) / x2);
    const cplx b = pref * (-1.0 + (3.0 - 3.0 * kI * x) / x2);
    const cplx sandwich = a * pp + b * pz2;
    sum += 2.0 * std::cos(k_z * r) * sandwich;
  }
  return -(3.0 * kPi / k) * sum - 0.5 * kI;
}

K1dRoot find_k1d(double delta, double d, int n_scan) {
  validate_spacing(d);
  n_scan = std::max(n_scan, 1000);
  const double lo = kK0;
  const double hi = kPi / d;
  auto f = [&](double kz) { return omega_of_kz(kz, d).real() - delta; };
  std::vector<double> ks(static_cast<std::size_t>(n_scan) + 1);
  std::vector<double> fs(ks.size());
  for (int i = 0; i <= n_scan; ++i) {
    // open at the light line, closed at the zone edge
    const double t = (i + 1e-6) / (n_scan + 1e-6);
    ks[static_cast<std::size_t>(i)] = lo + (hi - lo) * t;
    if (i == n_scan) ks[static_cast<std::size_t>(i)] = hi;
    fs[static_cast<std::size_t>(i)] = f(ks[static_cast<std::size_t>(i)]);
  }
  K1dRoot out;
  bool found = false;
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    double a = ks[i], b = ks[i + 1];
    double fa = fs[i], fb = fs[i + 1];
    if (fa == 0.0) {
      ++out.multiplicity;
      out.k1d = std::max(out.k1d, a);
      found = true;
      continue;
    }
    if (i + 2 == ks.size() && fb == 0.0) {
      ++out.multiplicity;
      out.k1d = std::max(out.k1d, b);
      found = true;
      continue;
    }
    if ((fa < 0.0) == (fb < 0.0)) continue;
    const double tol = 1e-12 / d;
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
      const double m = 0.5 * (a + b);
      const double fm = f(m);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    ++out.multiplicity;
    out.k1d = std::max(out.k1d, 0.5 * (a + b));
    found = true;
  }
  if (!found) {
    throw Error(ErrorCategory::out_of_band,
                "detuning " + std::to_string(delta) + " lies outside the guided band");
  }
  return out;
}

BandEdges band_edges(double d, int n_scan) {
  validate_spacing(d);
  const double lo = kK0;
  const double hi = kPi / d;
  auto f = [&](double kz) { return omega_of_kz(kz, d).real(); };
  BandEdges e;
  e.delta_lightline = f(lo);
  e.delta_zone_edge = f(hi);
  e.delta_min = std::min(e.delta_lightline, e.delta_zone_edge);
  e.delta_max = std::max(e.delta_lightline, e.delta_zone_edge);
  std::vector<double> fs(static_cast<std::size_t>(n_scan) + 1);
  const double h = (hi - lo) / n_scan;
  for (int i = 0; i <= n_scan; ++i) fs[static_cast<std::size_t>(i)] = f(lo + i * h);
  // Refine interior extrema by golden-section search on the bracketing cell.
  auto refine = [&](double a, double b, double sign) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), dd = a + g * (b - a);
    double fc = sign * f(c), fd = sign * f(dd);
    while (b - a > 1e-13 / d) {
      if (fc > fd) {
        b = dd; dd = c; fd = fc; c = b - g * (b - a); fc = sign * f(c);
      } else {
        a = c; c = dd; fc = fd; dd = a + g * (b - a); fd = sign * f(dd);
      }
    }
    return sign * std::max(fc, fd);
  };
  for (int i = 1; i < n_scan; ++i) {
    const double fm = fs[static_cast<std::size_t>(i - 1)];
    const double f0 = fs[static_cast<std::size_t>(i)];
    const double fp = fs[static_cast<std::size_t>(i + 1)];
    const double a = lo + (i - 1) * h;
    const double b = lo + (i + 1) * h;
    if (f0 >= fm && f0 >= fp) e.delta_max = std::max(e.delta_max, refine(a, b, 1.0));
    if (f0 <= fm && f0 <= fp) e.delta_min = std::min(e.delta_min, refine(a, b, -1.0));
  }
  return e;
}

}  // namespace awg
