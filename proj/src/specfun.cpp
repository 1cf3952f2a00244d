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

#include "atomwg/specfun.hpp"

#include <array>
#include <cmath>

namespace awg {

namespace {

constexpr double kZeta3 = 1.2020569031595942853997381615114;
constexpr int kMaxEven = 48;

// zeta(2m) for m = 1..kMaxEven by partial sum plus Euler-Maclaurin tail.
const std::array<double, kMaxEven + 1>& even_zetas() {
  static const std::array<double, kMaxEven + 1> table = [] {
    std::array<double, kMaxEven + 1> t{};
    t[1] = kPi * kPi / 6.0;
    constexpr int cut = 100;
    for (int m = 2; m <= kMaxEven; ++m) {
      const double p = 2.0 * m;
      double s = 0.0;
      for (int j = cut - 1; j >= 1; --j) s += std::pow(static_cast<double>(j), -p);
      const double n = cut;
      s += std::pow(n, 1.0 - p) / (p - 1.0) + 0.5 * std::pow(n, -p) +
           p / 12.0 * std::pow(n, -p - 1.0) -
           p * (p + 1.0) * (p + 2.0) / 720.0 * std::pow(n, -p - 3.0);
      t[static_cast<std::size_t>(m)] = s;
    }
    return t;
  }();
  return table;
}

cplx polylog_direct(int s, cplx z) {
  cplx sum = 0.0;
  cplx zl = z;
  for (int l = 1; l < 400; ++l) {
    const cplx term = zl / std::pow(static_cast<double>(l), s);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    zl *= z;
  }
  return sum;
}

cplx polylog_log_series(int s, cplx mu) {
  const auto& z2 = even_zetas();
  cplx sum = 0.0;
  // Terms with k <= s - 1 and the log term.
  if (s == 2) {
    sum += kPi * kPi / 6.0;
    sum += mu * (1.0 - std::log(-mu));
    sum += -0.5 * mu * mu / 2.0;  // zeta(0) mu^2 / 2!
  } else {
    sum += kZeta3;
    sum += z2[1] * mu;
    sum += mu * mu / 2.0 * (1.5 - std::log(-mu));
    sum += -0.5 * mu * mu * mu / 6.0;  // zeta(0) mu^3 / 3!
  }
  // zeta(1 - 2m) mu^{s - 1 + 2m} / (s - 1 + 2m)!, written with zeta(2m) to
  // avoid Bernoulli numbers: zeta(1 - 2m) / (s-1+2m)! =
  //   (-1)^m 2 zeta(2m) / ((2 pi)^{2m} 2m prod_{j=1}^{s-1} (2m + j)).
  const cplx mu2 = mu * mu;
  cplx mupow = std::pow(mu, s - 1) * mu2;
  const double inv_two_pi_sq = 1.0 / (4.0 * kPi * kPi);
  double scale = inv_two_pi_sq;
  for (int m = 1; m <= kMaxEven; ++m) {
    double denom = 2.0 * m;
    for (int j = 1; j <= s - 1; ++j) denom *= (2.0 * m + j);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const cplx term = sign * 2.0 * z2[static_cast<std::size_t>(m)] * scale / denom * mupow;
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    mupow *= mu2;
    scale *= inv_two_pi_sq;
  }
  return sum;
}

}  // namespace

double zeta_int(int n) {
  if (n < 2) throw Error(ErrorCategory::domain, "zeta_int requires n >= 2");
  if (n == 3) return kZeta3;
  if (n % 2 == 0 && n / 2 <= kMaxEven) return even_zetas()[static_cast<std::size_t>(n / 2)];
  double s = 0.0;
  for (int j = 200; j >= 1; --j) s += std::pow(static_cast<double>(j), -n);
  return s + std::pow(200.0, 1.0 - n) / (n - 1.0) - 0.5 * std::pow(200.0, -n);
}

cplx polylog(int s, cplx z) {
  if (s < 1 || s > 3) throw Error(ErrorCategory::domain, "polylog order must be 1, 2 or 3");
  const double r = std::abs(z);
  if (!(r <= 1.0 + 1e-12)) {
    throw Error(ErrorCategory::domain, "polylog argument outside the closed unit disk");
  }
  if (s == 1) {
    if (z == cplx(1.0, 0.0)) throw Error(ErrorCategory::singularity, "Li_1 diverges at z = 1");
    return -std::log(1.0 - z);
  }
  if (z == cplx(1.0, 0.0)) return zeta_int(s);
  if (r <= 0.5) return polylog_direct(s, z);
  cplx mu = std::log(z);
  if (mu.real() > 0.0) mu.real(0.0);  // |z| rounding above 1
  return polylog_log_series(s, mu);
}

cplx hankel1(int m, cplx x) {
  if (m != 0 && m != 1) throw Error(ErrorCategory::domain, "hankel1 supports orders 0 and 1");
  if (x == cplx(0.0, 0.0)) throw Error(ErrorCategory::singularity, "Hankel function diverges at 0");
  const double re = x.real();
  const double im = x.imag();
  if (re > 0.0 && std::abs(im) <= 1e-14 * re) {
    return {std::cyl_bessel_j(static_cast<double>(m), re),
            std::cyl_neumann(static_cast<double>(m), re)};
  }
  if (im > 0.0 && std::abs(re) <= 1e-14 * im) {
    if (im > 700.0) return 0.0;
    const double kv = std::cyl_bessel_k(static_cast<double>(m), im);
    return m == 0 ? cplx(0.0, -2.0 / kPi * kv) : cplx(-2.0 / kPi * kv, 0.0);
  }
  throw Error(ErrorCategory::domain,
              "hankel1 argument must be real positive or positive imaginary");
}

cplx transverse_wavenumber(double k, double q) {
  const double diff = k * k - q * q;
  return diff >= 0.0 ? cplx(std::sqrt(diff), 0.0) : cplx(0.0, std::sqrt(-diff));
}

}  // namespace awg
