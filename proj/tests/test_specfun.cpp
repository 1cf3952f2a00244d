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

#include "atomwg/specfun.hpp"

using namespace awg;

namespace {

// Ascending series for J_0, J_1, Y_0 and Y_1 summed to convergence.
struct Bessel {
  double j0, j1, y0, y1;
};

Bessel bessel_series(double x) {
  const double h = x / 2.0;
  double j0 = 0, j1 = 0, y0s = 0, y1s = 0;
  double t = 1.0;  // (-h^2)^m / (m!)^2
  double harm = 0.0;
  for (int m = 0; m < 60; ++m) {
    if (m > 0) {
      t *= -h * h / (static_cast<double>(m) * m);
      harm += 1.0 / m;
    }
    j0 += t;
    j1 += t * h / (m + 1);
    y0s += t * harm;
    // Y_1 series: -(h/pi) sum (-h^2)^m/(m!(m+1)!) (H_m + H_{m+1})
    y1s += t / (m + 1) * (2.0 * harm + 1.0 / (m + 1));
  }
  const double gamma = 0.57721566490153286;
  const double y0 = 2.0 / kPi * ((std::log(h) + gamma) * j0 - y0s);
  const double y1 = 2.0 / kPi * (std::log(h) + gamma) * j1 - 1.0 / (kPi * h) - h / kPi * y1s;
  return {j0, j1, y0, y1};
}

}  // namespace

TEST_CASE("polylog constants") {
  CHECK(polylog(2, 1.0).real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
  CHECK(polylog(3, 1.0).real() == doctest::Approx(1.2020569031595942).epsilon(1e-13));
  CHECK(polylog(2, -1.0).real() == doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-13));
  CHECK(std::abs(polylog(1, 0.5) - std::log(2.0)) < 1e-15);
  CHECK_THROWS_AS(polylog(1, 1.0), Error);
  CHECK_THROWS_AS(polylog(2, 1.1), Error);
}

TEST_CASE("Li3 on the unit circle against the direct series") {
  const cplx z = std::polar(1.0, 0.7 * kPi);
  cplx zl = 1.0, sum = 0.0;
  for (long l = 1; l <= 10000000; ++l) {
    zl *= z;
    const double ld = static_cast<double>(l);
    sum += zl / (ld * ld * ld);
  }
  CHECK(std::abs(polylog(3, z) - sum) < 1e-9);
}

TEST_CASE("polylog identities") {
  for (double th : {0.05, 0.3, 1.0, 2.0, 3.0}) {
    const double h = 1e-5;
    const cplx d3 = (polylog(3, std::polar(1.0, th + h)) - polylog(3, std::polar(1.0, th - h))) / (2.0 * h);
    CHECK(std::abs(d3 - kI * polylog(2, std::polar(1.0, th))) < 1e-6);
  }
  for (cplx z : {cplx(0.3, 0.4), cplx(-0.7, 0.6), cplx(0.99, 0.1), std::polar(1.0, 2.2)}) {
    for (int s : {2, 3}) CHECK(std::abs(polylog(s, std::conj(z)) - std::conj(polylog(s, z))) < 1e-13);
  }
}

TEST_CASE("Hankel functions") {
  CHECK(hankel1(0, 1e-8).real() == doctest::Approx(1.0).epsilon(1e-10));
  const Bessel b = bessel_series(1.0);
  const cplx h0 = hankel1(0, 1.0), h1 = hankel1(1, 1.0);
  CHECK(std::abs(h0 - cplx(b.j0, b.y0)) < 1e-10 * std::abs(h0));
  CHECK(std::abs(h1 - cplx(b.j1, b.y1)) < 1e-10 * std::abs(h1));
  CHECK_THROWS_AS(hankel1(0, 0.0), Error);
  for (double x = 0.5; x <= 20.0; x += 0.5) {
    const cplx a = hankel1(0, x), c = hankel1(1, x);
    const double w = a.real() * c.imag() - c.real() * a.imag();
    CHECK(w == doctest::Approx(-2.0 / (kPi * x)).epsilon(1e-9));
  }
  double prev = 1e300;
  for (double t = 0.1; t <= 20.0; t += 0.1) {
    const double v = std::abs(hankel1(0, cplx(0, t)));
    CHECK(v < prev);
    prev = v;
  }
  CHECK(transverse_wavenumber(1.0, 2.0).imag() > 0.0);
  CHECK(transverse_wavenumber(2.0, 1.0).real() > 0.0);
}
