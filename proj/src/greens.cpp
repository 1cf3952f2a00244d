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

#include "atomwg/greens.hpp"

#include <cmath>

namespace awg {

namespace {

struct Radial {
  double r;
  Vec3 rhat;
};

Radial separation(const Vec3& ra, const Vec3& rb) {
  const Vec3 dr = ra - rb;
  const double r = dr.norm();
  if (!(r > 0.0)) {
    throw Error(ErrorCategory::singularity,
                "vacuum Green's tensor evaluated at coincident points");
  }
  return {r, dr / r};
}

// Scalar prefactors of the identity and the Rhat Rhat parts.
void radial_coefficients(double r, double k, cplx& a, cplx& b) {
  const double x = k * r;
  const double x2 = x * x;
  const cplx pref = std::exp(kI * x) / (4.0 * kPi * r);
  a = pref * (1.0 + (kI * x - 1.0) / x2);
  b = pref * (-1.0 + (3.0 - 3.0 * kI * x) / x2);
}

}  // namespace

CMat3 greens_free(const Vec3& ra, const Vec3& rb, double k) {
  if (!(k > 0.0)) throw Error(ErrorCategory::domain, "wavenumber must be positive");
  const auto [r, rhat] = separation(ra, rb);
  cplx a, b;
  radial_coefficients(r, k, a, b);
  CMat3 g = b * (rhat * rhat.transpose()).cast<cplx>();
  g.diagonal().array() += a;
  return g;
}

cplx greens_sandwich(const Vec3& ra, const Vec3& rb, const CVec3& dl, const CVec3& dr,
                     double k) {
  const auto [r, rhat] = separation(ra, rb);
  cplx a, b;
  radial_coefficients(r, k, a, b);
  const cplx dl_dr = dl.dot(dr);  // conjugates dl
  const cplx dl_r = dl.dot(rhat.cast<cplx>());
  const cplx r_dr = rhat.cast<cplx>().transpose() * dr;
  return a * dl_dr + b * dl_r * r_dr;
}

CMat3 coincident_greens_imag(double k) {
  if (!(k > 0.0)) throw Error(ErrorCategory::domain, "wavenumber must be positive");
  return CMat3::Identity() * cplx(0.0, k / (6.0 * kPi));
}

cplx coupling_element(const Emitter& a, const Emitter& b, double k) {
  const double s = std::sqrt(a.gamma0 * b.gamma0);
  return -(3.0 * kPi * s / k) * greens_sandwich(a.position, b.position, a.dipole, b.dipole, k);
}

InteractionMatrices interaction_matrices(std::span<const Emitter> emitters, double k) {
  const auto m = static_cast<Eigen::Index>(emitters.size());
  InteractionMatrices out{CMatrix::Zero(m, m), CMatrix::Zero(m, m)};
  for (Eigen::Index i = 0; i < m; ++i) {
    const Emitter& ei = emitters[static_cast<std::size_t>(i)];
    if (!(ei.gamma0 > 0.0)) throw Error(ErrorCategory::domain, "emitter linewidth must be positive");
    out.J(i, i) = ei.detuning;
    out.Gamma(i, i) = ei.gamma0;
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const Emitter& ej = emitters[static_cast<std::size_t>(j)];
      const CMat3 g = greens_free(ei.position, ej.position, k);
      const double s = std::sqrt(ei.gamma0 * ej.gamma0);
      const CMat3 re = g.real().cast<cplx>();
      const CMat3 im = g.imag().cast<cplx>();
      const cplx jij = -(3.0 * kPi * s / k) * ei.dipole.dot(re * ej.dipole);
      const cplx gij = (6.0 * kPi * s / k) * ei.dipole.dot(im * ej.dipole);
      out.J(i, j) = jij;
      out.J(j, i) = std::conj(jij);
      out.Gamma(i, j) = gij;
      out.Gamma(j, i) = std::conj(gij);
    }
  }
  return out;
}

}  // namespace awg
