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

#include "atomwg/dispersion.hpp"

using namespace awg;

TEST_CASE("guided branch is lossless and even") {
  CHECK(std::abs(omega_of_kz(0.9 * kPi / 0.1, 0.1).imag()) < 1e-10);
  for (double d : {0.05, 0.1, 0.2, 0.3}) {
    for (int i = 1; i <= 40; ++i) {
      const double kz = kK0 + (kPi / d - kK0) * i / 40.0;
      CHECK(std::abs(omega_of_kz(kz, d).imag()) < 1e-10);
      CHECK(std::abs(omega_of_kz(kz, d) - omega_of_kz(-kz, d)) < 1e-12 * std::abs(omega_of_kz(kz, d)));
    }
  }
  CHECK(omega_of_kz(0.99 * kK0, 0.1).imag() < 0.0);
  CHECK(omega_of_kz_sum(0.99 * kK0, 0.1, 1000).imag() < 0.0);
}

TEST_CASE("closed form against the lattice sum") {
  const double d = 0.1;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double kz = (-0.98 + 1.96 * i / 49.0) * kPi / d;
    const cplx a = omega_of_kz(kz, d), b = omega_of_kz_sum(kz, d, 1000000);
    worst = std::max(worst, std::abs(a - b) / std::abs(a));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("lattice sum self-convergence") {
  for (double kz : {1.3 * kK0, 2.0 * kK0, 0.9 * kPi / 0.1}) {
    const cplx a = omega_of_kz_sum(kz, 0.1, 100000), b = omega_of_kz_sum(kz, 0.1, 200000);
    CHECK(std::abs(a - b) / std::abs(b) < 1e-6);
  }
}

TEST_CASE("group velocity") {
  CHECK(std::abs(group_velocity(kPi / 0.1, 0.1)) < 1e-8);
  CHECK_THROWS_AS(group_velocity(0.5 * kK0, 0.1), Error);
  std::mt19937 gen(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double d = 0.05 + 0.3 * u(gen);
    const double kz = kK0 + (kPi / d - kK0) * (0.1 + 0.8 * u(gen));
    const double h = 1e-6 / d;
    const double fd = (omega_of_kz(kz + h, d).real() - omega_of_kz(kz - h, d).real()) / (2.0 * h);
    CHECK(group_velocity(kz, d) == doctest::Approx(fd).epsilon(1e-6));
  }
  for (int i = 1; i < 100; ++i) {
    const double kz = kK0 + (kPi / 0.1 - kK0) * i / 100.0;
    CHECK(group_velocity(kz, 0.1) > 0.0);
  }
}

TEST_CASE("inverse band map") {
  const double d = 0.1;
  const double k = 0.7 * kPi / d;
  const K1dRoot r = find_k1d(omega_of_kz(k, d).real(), d);
  CHECK(std::abs(r.k1d - k) < 1e-10 / d);
  const BandEdges e = band_edges(d);
  CHECK_THROWS_AS(find_k1d(e.delta_max + 1.0, d), Error);
  try {
    find_k1d(e.delta_max + 1.0, d);
  } catch (const Error& err) {
    CHECK(err.category() == ErrorCategory::out_of_band);
  }
  // root count against an independent sign-change scan
  for (double frac : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double delta = e.delta_min + frac * (e.delta_max - e.delta_min);
    int changes = 0;
    double prev = omega_of_kz(kK0 * (1 + 1e-9), d).real() - delta;
    for (int i = 1; i <= 1000; ++i) {
      const double kz = kK0 + (kPi / d - kK0) * i / 1000.0;
      const double v = omega_of_kz(kz, d).real() - delta;
      if ((v < 0.0) != (prev < 0.0)) ++changes;
      prev = v;
    }
    CHECK(find_k1d(delta, d, 1000).multiplicity == changes);
  }
}

TEST_CASE("band edges") {
  const double d = 0.1;
  const BandEdges e = band_edges(d);
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i <= 100000; ++i) {
    const double kz = kK0 + (kPi / d - kK0) * i / 100000.0;
    const double v = omega_of_kz(kz, d).real();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(std::abs(e.delta_min - lo) < 1e-8);
  CHECK(std::abs(e.delta_max - hi) < 1e-8);
  // monotone guided branch: light line at the bottom, zone edge at the top
  CHECK(e.delta_min == doctest::Approx(e.delta_lightline));
  CHECK(e.delta_max == doctest::Approx(e.delta_zone_edge));
  for (double frac : {0.01, 0.5, 0.99}) {
    const double delta = e.delta_min + frac * (e.delta_max - e.delta_min);
    CHECK_NOTHROW(find_k1d(delta, d));
  }
}
