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

#include <random>

#include <Eigen/Eigenvalues>

#include "atomwg/greens.hpp"

using namespace awg;

namespace {

// zz element of G0 on the z axis, written out term by term:
// G_zz = e^{ikR}/(4 pi R) * [1 + (ikR - 1)/(kR)^2 - 1 + (3 - 3ikR)/(kR)^2]
//      = e^{ikR}/(4 pi R) * 2 (1 - ikR) / (kR)^2.
cplx axial_zz(double r, double k) {
  const cplx ikr(0.0, k * r);
  const double x2 = k * r * k * r;
  return std::exp(ikr) / (4.0 * kPi * r) * (2.0 - 2.0 * ikr) / x2;
}

Vec3 random_point(std::mt19937& g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return Vec3(u(g), u(g), u(g));
}

CVec3 random_dipole(std::mt19937& g) {
  std::normal_distribution<double> n;
  CVec3 d(cplx(n(g), n(g)), cplx(n(g), n(g)), cplx(n(g), n(g)));
  return d.normalized();
}

}  // namespace

TEST_CASE("axial greens tensor against the scalar expansion") {
  const Vec3 a(0, 0, 0), b(0, 0, 0.1);
  const cplx g = greens_free(a, b)(2, 2);
  const cplx ref = axial_zz(0.1, kK0);
  CHECK(std::abs(g - ref) / std::abs(ref) < 1e-12);
  // transverse component: e^{ix}/(4 pi R) [1 + (ix - 1)/x^2]
  const double x = kK0 * 0.1;
  const cplx tx = std::exp(cplx(0, x)) / (4.0 * kPi * 0.1) * (1.0 + (cplx(0, x) - 1.0) / (x * x));
  CHECK(std::abs(greens_free(a, b)(0, 0) - tx) / std::abs(tx) < 1e-12);
}

TEST_CASE("reciprocity") {
  std::mt19937 gen(3);
  for (int i = 0; i < 100; ++i) {
    const Vec3 a = random_point(gen), b = random_point(gen);
    const CMat3 gab = greens_free(a, b), gba = greens_free(b, a);
    CHECK((gab - gba.transpose()).norm() <= 1e-13 * gab.norm());
    CHECK((gab - gab.transpose()).norm() <= 1e-13 * gab.norm());
  }
}

TEST_CASE("far field decays as 1/R") {
  const Vec3 o(0, 0, 0);
  const double r1 = 1e3, r2 = 2e3;
  const double g1 = std::abs(greens_free(o, Vec3(0, 0, r1))(0, 0));
  const double g2 = std::abs(greens_free(o, Vec3(0, 0, r2))(0, 0));
  CHECK(g1 / g2 == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("coincident points") {
  const CMat3 im = coincident_greens_imag(kK0);
  CHECK(im(0, 0).imag() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(im(0, 0).real() == 0.0);
  CHECK(std::abs(im(0, 1)) == 0.0);
  CHECK_THROWS_AS(greens_free(Vec3(1, 2, 3), Vec3(1, 2, 3)), Error);
  // small separation limit of the closed form
  const CMat3 g = greens_free(Vec3(0, 0, 0), Vec3(0, 0, 1e-4));
  for (int i = 0; i < 3; ++i) CHECK(g(i, i).imag() == doctest::Approx(kK0 / (6.0 * kPi)).epsilon(1e-6));
  // isotropy of the coincident limit
  std::mt19937 gen(5);
  std::vector<double> v;
  for (int i = 0; i < 50; ++i) {
    const CVec3 d = random_dipole(gen);
    v.push_back((d.adjoint() * im * d)(0).imag());
  }
  double mean = 0.0, var = 0.0;
  for (double x : v) mean += x / 50.0;
  for (double x : v) var += (x - mean) * (x - mean) / 50.0;
  CHECK(var < 1e-14);
}

TEST_CASE("interaction matrices") {
  SUBCASE("single emitter") {
    Emitter e;
    e.gamma0 = 0.7;
    e.detuning = 2.5;
    const auto m = interaction_matrices(std::span<const Emitter>(&e, 1));
    CHECK(m.Gamma(0, 0).real() == doctest::Approx(0.7));
    CHECK(m.J(0, 0).real() == doctest::Approx(2.5));
  }
  SUBCASE("Dicke limit") {
    std::vector<Emitter> e(2);
    e[1].position = Vec3(0, 0, 1e-3);
    const auto m = interaction_matrices(e);
    CHECK(std::abs(m.Gamma(0, 1).real() - 1.0) < 1e-4);
  }
  SUBCASE("axial pair against the scalar formula") {
    std::vector<Emitter> e(2);
    e[1].position = Vec3(0, 0, 0.1);
    const auto m = interaction_matrices(e);
    const cplx g = axial_zz(0.1, kK0);
    CHECK(m.J(0, 1).real() == doctest::Approx(-3.0 * kPi / kK0 * g.real()).epsilon(1e-12));
    CHECK(m.Gamma(0, 1).real() == doctest::Approx(6.0 * kPi / kK0 * g.imag()).epsilon(1e-12));
    const cplx h = coupling_element(e[0], e[1]);
    CHECK(std::abs(h - (m.J(0, 1) - 0.5 * kI * m.Gamma(0, 1))) < 1e-14);
  }
  SUBCASE("unit diagonal on a d = 0.1 chain") {
    const auto e = ChainGeometry(20, 0.1).emitters();
    const auto m = interaction_matrices(e);
    for (int i = 0; i < 20; ++i) CHECK(m.Gamma(i, i).real() == 1.0);
  }
  SUBCASE("Gamma is positive semidefinite") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    std::vector<Emitter> e(200);
    for (auto& x : e) {
      x.position = Vec3(u(gen), u(gen), u(gen));
      x.dipole = random_dipole(gen);
      x.gamma0 = 0.1 + u(gen);
    }
    const auto m = interaction_matrices(e);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m.Gamma, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
  }
  SUBCASE("coincident emitters") {
    std::vector<Emitter> e(2);
    CHECK_THROWS_AS(interaction_matrices(e), Error);
  }
}

TEST_CASE("geometry invariants") {
  CHECK_THROWS_AS(ChainGeometry(10, 0.6), Error);
  CHECK_THROWS_AS(ChainGeometry(10, 0.1, CVec3(0, 0, 0)), Error);
  ImpurityQubit q;
  q.rho_q = 0.0;
  CHECK_THROWS_AS(q.validate(), Error);
  q.rho_q = 0.1;
  q.gamma0_q = -1.0;
  CHECK_THROWS_AS(q.validate(), Error);
}
