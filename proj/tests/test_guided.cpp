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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "atomwg/dispersion.hpp"
#include "atomwg/guided.hpp"
#include "atomwg/propagate.hpp"

using namespace awg;

namespace {

constexpr double d = 0.1;
const double k07 = 0.7 * kPi / d;

// sum_n e^{-i q z} H_0(k_perp rho), q = k_z + 2 pi n / d, with std:: Bessels.
cplx scalar_v(double kz, const Vec3& r) {
  const double rho = std::hypot(r.x(), r.y());
  cplx s = 0.0;
  for (int n = -40; n <= 40; ++n) {
    const double q = kz + 2.0 * kPi * n / d;
    const double t = kK0 * kK0 - q * q;
    cplx h0;
    if (t > 0.0) {
      const double kp = std::sqrt(t);
      h0 = cplx(std::cyl_bessel_j(0.0, kp * rho), std::cyl_neumann(0.0, kp * rho));
    } else {
      h0 = 2.0 / (kI * kPi) * std::cyl_bessel_k(0.0, std::sqrt(-t) * rho);
    }
    s += std::exp(-kI * (q * r.z())) * h0;
  }
  return s;
}

// v = z f + grad(d f / dz) / k^2 by central differences.
CVec3 v_definition(double kz, const CylPosition& p) {
  const Vec3 r = p.cartesian();
  const double h = 1e-4 * d;
  auto dz = [&](const Vec3& x) {
    return (scalar_v(kz, x + Vec3(0, 0, h)) - scalar_v(kz, x - Vec3(0, 0, h))) / (2.0 * h);
  };
  CVec3 out;
  for (int c = 0; c < 3; ++c) {
    Vec3 e = Vec3::Zero();
    e(c) = h;
    out(c) = (dz(r + e) - dz(r - e)) / (2.0 * h) / (kK0 * kK0);
  }
  out(2) += scalar_v(kz, r);
  return out;
}

ImpurityQubit make_qubit(double rho, double z, CVec3 dip = CVec3(0, 0, 1), double phi = 0.0) {
  ImpurityQubit q;
  q.rho_q = rho;
  q.z_q = z;
  q.phi_q = phi;
  q.dipole = dip;
  return q;
}

}  // namespace

TEST_CASE("mode functions") {
  const CylPosition p{0.4 * d, 0.3, 0.2 * d};
  const ModeSample u = mode_u(k07, p, d), v = mode_v(k07, p, d);
  CHECK(u.phi == 0.0);
  CHECK(v.phi == 0.0);
  CHECK(std::abs(v.rho + std::conj(u.rho)) < 1e-10 * std::abs(u.rho));
  CHECK(std::abs(v.z + std::conj(u.z)) < 1e-10 * std::abs(u.z));

  double prev = 1e300;
  for (double rho = 0.2 * d; rho <= 5.0 * d; rho += 0.1 * d) {
    const ModeSample m = mode_u(k07, {rho, 0.0, 0.3 * d}, d);
    const double a = std::sqrt(std::norm(m.rho) + std::norm(m.z));
    CHECK(a < prev);
    prev = a;
  }

  const ModeSample a30 = mode_u(k07, {0.4 * d, 0.0, 0.0}, d, 30);
  const ModeSample a60 = mode_u(k07, {0.4 * d, 0.0, 0.0}, d, 60);
  CHECK(a30.converged);
  CHECK(std::abs(a30.z - a60.z) < 1e-10 * std::abs(a60.z));
  CHECK(std::abs(a30.rho - a60.rho) < 1e-10 * std::abs(a60.rho));
  MESSAGE("shells used at rho = 0.4d: " << mode_u(k07, {0.4 * d, 0.0, 0.0}, d).n_shells);

  CHECK_THROWS_AS(mode_u(k07, {0.0, 0.0, 0.0}, d), Error);
}

TEST_CASE("radiative mode against the defining sum") {
  const double kz = 0.5 * kK0;
  const CylPosition p{0.7 * d, 0.4, 0.3 * d};
  const ModeSample u = mode_u(kz, p, d), v = mode_v(kz, p, d);
  CHECK(std::abs(v.z + std::conj(u.z)) > 1e-3);
  const CVec3 ref = v_definition(kz, p);
  const CVec3 got = v.cartesian();
  CHECK((got - ref).norm() < 1e-5 * ref.norm());
}

TEST_CASE("guided rate") {
  const double delta = delta_for_k1d(k07, d);
  const ImpurityQubit q = make_qubit(d, 0.0);
  const GuidedRate g = gamma_guided(q, d, delta);
  CHECK(!g.bandgap);
  CHECK(g.total > 0.0);
  CHECK(std::abs(g.k1d - k07) < 1e-9);
  CHECK(std::abs(omega_of_kz(g.k1d, d).imag()) < 1e-10);

  const GuidedRate gap = gamma_guided(q, d, band_edges(d).delta_max + 2.0);
  CHECK(gap.bandgap);
  CHECK(gap.total == 0.0);

  // lattice periodicity and global dipole phase
  const ImpurityQubit q2 = make_qubit(d, 0.3 * d);
  const ImpurityQubit q3 = make_qubit(d, 1.3 * d, CVec3(0, 0, std::polar(1.0, 0.9)));
  CHECK(gamma_guided(q3, d, delta).total == doctest::Approx(gamma_guided(q2, d, delta).total).epsilon(1e-10));

  // chiral dipole: unequal directions, swapped by complex conjugation
  const double s = 1.0 / std::sqrt(2.0);
  const CVec3 chiral(-s, 0, cplx(0, s));
  const GuidedRate c1 = gamma_guided(make_qubit(0.4 * d, 0.5 * d, chiral), d, delta);
  const GuidedRate c2 = gamma_guided(make_qubit(0.4 * d, 0.5 * d, chiral.conjugate()), d, delta);
  CHECK(std::abs(c1.left - c1.right) > 0.1 * c1.total);
  CHECK(c1.left == doctest::Approx(c2.right).epsilon(1e-12));
  CHECK(c1.right == doctest::Approx(c2.left).epsilon(1e-12));
  CHECK(c1.left > c1.right);  // emits towards -z
}

TEST_CASE("free-space rate and shift") {
  const double delta = delta_for_k1d(k07, d);
  const ImpurityQubit far = make_qubit(10.0, 0.0);
  CHECK(std::abs(gamma_free_space(far, d, delta) - 1.0) < 1e-3);
  CHECK(std::abs(coherent_shift(far, d, delta)) < 1e-3);

  // azimuthal symmetry for an axial dipole
  const ImpurityQubit q0 = make_qubit(0.6 * d, 0.2 * d);
  const CouplingRates r0 = coupling_rates(q0, d, delta);
  for (double phi : {0.7, 1.9, 4.0}) {
    const CouplingRates r = coupling_rates(make_qubit(0.6 * d, 0.2 * d, CVec3(0, 0, 1), phi), d, delta);
    CHECK(r.gamma_free == doctest::Approx(r0.gamma_free).epsilon(1e-9));
    CHECK(r.gamma_1d == doctest::Approx(r0.gamma_1d).epsilon(1e-10));
  }
  CHECK(r0.gamma_free >= 0.0);
  CHECK(r0.optical_depth == doctest::Approx(r0.gamma_1d / r0.gamma_free));

  // strict local minimum near 0.4d at mid-cell
  auto gf = [&](double rho) { return gamma_free_space(make_qubit(rho * d, 0.5 * d), d, delta); };
  const double a = gf(0.35), b = gf(0.4), c = gf(0.45);
  CHECK(b < a);
  CHECK(b < c);

  // the shift is smooth through the pole location
  const ImpurityQubit q = make_qubit(d, 0.0);
  const double s0 = coherent_shift(q, d, delta);
  const double s1 = coherent_shift(q, d, delta + 1e-6);
  CHECK(std::abs(s0 - s1) < 1e-4);
}

TEST_CASE("shift against the phase drift of a qubit in a long chain") {
  const double delta = delta_for_k1d(k07, d);
  ImpurityQubit q = make_qubit(d, 1000.0 * d);
  q.gamma0_q = 0.02;
  q.detuning_q = delta;
  const double shift = q.gamma0_q * coherent_shift(q, d, delta);
  const EffectiveModel m = build_model(ChainGeometry(2000, d), {q});
  State s = excite_site(m.size(), m.qubit_index(0));
  Propagator p(m, {});
  // linear fit of the unwrapped phase of exp(i delta t) c_q(t)
  std::vector<double> ts, ph;
  double last = 0.0, t = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double target = 10.0 + i;
    p.advance(s, target - t);
    t = target;
    double a = std::arg(s.amplitudes(m.qubit_index(0)) * std::exp(kI * (delta * t)));
    while (a - last > kPi) a -= 2.0 * kPi;
    while (a - last < -kPi) a += 2.0 * kPi;
    last = a;
    ts.push_back(t);
    ph.push_back(a);
  }
  double mt = 0, mp = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    mt += ts[i] / ts.size();
    mp += ph[i] / ph.size();
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    sxy += (ts[i] - mt) * (ph[i] - mp);
    sxx += (ts[i] - mt) * (ts[i] - mt);
  }
  const double measured = -sxy / sxx;
  CHECK(measured == doctest::Approx(shift).epsilon(0.10));
}

TEST_CASE("decay maps and magic point") {
  const double delta = delta_for_k1d(k07, d);
  const ResultTable t = scan_decay_rates(d, delta, {0.5 * d, 1.0 * d}, {-0.3 * d, 0.7 * d}, CVec3(0, 0, 1));
  const auto& od = t.column("optical_depth");
  CHECK(od[0] == doctest::Approx(od[1]).epsilon(1e-8));
  CHECK(od[2] == doctest::Approx(od[3]).epsilon(1e-8));
  CHECK_THROWS_AS(scan_decay_rates(d, delta, {4.0 * d}, {0.0}), Error);

  const MagicPoint mp = find_magic_point(d, delta);
  // the dark line bends towards the atom, so the global minimum sits near but not at mid-cell
  CHECK(std::abs(mp.z) >= 0.3 * d);
  CHECK(std::abs(mp.z) <= 0.5 * d);
  CHECK(mp.gamma_free <= gamma_free_space(make_qubit(0.4 * d, 0.5 * d), d, delta));
  CHECK(mp.rho >= 0.3 * d);
  CHECK(mp.rho <= 0.5 * d);
  const double at_site = gamma_free_space(make_qubit(mp.rho, 0.0), d, delta);
  CHECK(at_site / mp.gamma_free >= 5.0);
  for (double kk : {0.6, 0.8}) {
    const MagicPoint other = find_magic_point(d, delta_for_k1d(kk * kPi / d, d));
    CHECK(other.rho == doctest::Approx(mp.rho).epsilon(0.10));
  }
}
