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

#include "atomwg/initial_states.hpp"

#include <cmath>
#include <sstream>

#include "atomwg/dispersion.hpp"

namespace awg {

namespace {

// Fraction of the Gaussian weight exp(-2 x^2 / zeta^2) that lies outside the
// chain, estimated on the extended lattice.
double outside_weight(const ChainGeometry& chain, double zeta, double center) {
  const double d = chain.spacing();
  const int n = chain.n_atoms();
  const int reach = static_cast<int>(std::ceil(6.0 * zeta / d)) + 1;
  const int c = static_cast<int>(std::lround(center / d));
  double inside = 0.0, all = 0.0;
  for (int j = c - reach; j <= c + reach; ++j) {
    const double x = j * d - center;
    const double w = std::exp(-2.0 * x * x / (zeta * zeta));
    all += w;
    if (j >= 0 && j < n) inside += w;
  }
  return all > 0.0 ? 1.0 - inside / all : 0.0;
}

void check_common(const ChainGeometry& chain, double zeta, double center) {
  if (!(zeta > chain.spacing())) throw Error(ErrorCategory::domain, "packet width zeta must exceed d");
  const double zmax = (chain.n_atoms() - 1) * chain.spacing();
  if (center < 0.0 || center > zmax) throw Error(ErrorCategory::domain, "packet center lies outside the chain");
}

void flag_truncation(PreparedState& p, const ChainGeometry& chain, double zeta, double center) {
  const double w = outside_weight(chain, zeta, center);
  if (w > 0.01) {
    p.truncated = true;
    std::ostringstream os;
    os << "packet centered at z = " << center << " loses " << 100.0 * w << "% of its weight past the chain ends";
    p.warnings.push_back(os.str());
  }
}

}  // namespace

PreparedState init_spin_wave(const ChainGeometry& chain, double k1d, double zeta, double center, int n_total) {
  check_common(chain, zeta, center);
  const int n = chain.n_atoms();
  if (n_total < 0) n_total = n;
  if (n_total < n) throw Error(ErrorCategory::domain, "model smaller than the chain");
  CVector c = CVector::Zero(n_total);
  for (int i = 0; i < n; ++i) {
    const double zb = chain.atom_position(i).z() - center;
    c(i) = std::exp(-kI * (k1d * zb)) * std::exp(-zb * zb / (zeta * zeta));
  }
  c.normalize();
  PreparedState p{single_excitation(c), false, {}};
  flag_truncation(p, chain, zeta, center);
  return p;
}

PreparedState init_two_photon(const ChainGeometry& chain, double k1d, double zeta,
                              std::pair<double, double> centers, int n_total) {
  check_common(chain, zeta, centers.first);
  check_common(chain, zeta, centers.second);
  if (std::abs(centers.second - centers.first) <= 2.0 * zeta) {
    throw Error(ErrorCategory::domain, "packet centers must be separated by more than 2 zeta");
  }
  const int n = chain.n_atoms();
  if (n_total < 0) n_total = n;
  if (n_total < n) throw Error(ErrorCategory::domain, "model smaller than the chain");
  CVector w1 = CVector::Zero(n_total), w2 = CVector::Zero(n_total);
  for (int i = 0; i < n; ++i) {
    const double z = chain.atom_position(i).z();
    const double a = z - centers.first;
    const double b = z - centers.second;
    w1(i) = std::exp(kI * (k1d * a)) * std::exp(-a * a / (zeta * zeta));
    w2(i) = std::exp(-kI * (k1d * b)) * std::exp(-b * b / (zeta * zeta));
  }
  PairIndex idx(n_total);
  CVector c(idx.size());
  long k = 0;
  for (int a = 0; a < n_total; ++a) {
    for (int b = a + 1; b < n_total; ++b, ++k) c(k) = w1(a) * w2(b) + w1(b) * w2(a);
  }
  c.normalize();
  PreparedState p{pair_state(n_total, c), false, {}};
  flag_truncation(p, chain, zeta, centers.first);
  flag_truncation(p, chain, zeta, centers.second);
  return p;
}

PacketSpectrum packet_spectrum(const State& s, const ChainGeometry& chain, double k_center,
                               double halfwidth, int n) {
  if (s.manifold != 1) throw Error(ErrorCategory::domain, "packet spectrum needs a single-excitation state");
  if (n < 2 || !(halfwidth > 0.0)) throw Error(ErrorCategory::domain, "invalid spectrum grid");
  const double d = chain.spacing();
  const double kmax = kPi / d;
  PacketSpectrum out;
  double total = 0.0;
  for (int m = 0; m < n; ++m) {
    const double k = k_center - halfwidth + 2.0 * halfwidth * m / (n - 1);
    if (std::abs(k) <= kK0 || std::abs(k) > kmax) continue;  // guided band only
    cplx acc = 0.0;
    for (int j = 0; j < chain.n_atoms(); ++j) acc += s.amplitudes(j) * std::exp(kI * (k * j * d));
    out.k.push_back(k);
    out.delta.push_back(omega_of_kz(k, d).real());
    out.weight.push_back(std::norm(acc));
    total += std::norm(acc);
  }
  if (!(total > 0.0)) throw Error(ErrorCategory::numerical, "packet has no weight in the sampled band");
  for (std::size_t m = 0; m < out.weight.size(); ++m) {
    out.weight[m] /= total;
    out.mean_delta += out.weight[m] * out.delta[m];
  }
  return out;
}

}  // namespace awg
