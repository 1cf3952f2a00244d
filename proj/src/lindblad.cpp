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

#include "atomwg/lindblad.hpp"

#include <cmath>

namespace awg {

TrajectoryRecord lindblad_reference(const EffectiveModel& model, const State& initial,
                                    const std::vector<double>& t_grid, double dt) {
  const int m = model.size();
  if (m > 4) throw Error(ErrorCategory::size, "master-equation reference supports at most 4 emitters");
  if (t_grid.empty() || !(dt > 0.0)) throw Error(ErrorCategory::domain, "invalid time grid");
  const int dim = 1 << m;
  // bit i set <=> emitter i excited
  std::vector<CMatrix> lower(static_cast<std::size_t>(m), CMatrix::Zero(dim, dim));
  for (int i = 0; i < m; ++i) {
    for (int b = 0; b < dim; ++b) {
      if (b & (1 << i)) lower[static_cast<std::size_t>(i)](b ^ (1 << i), b) = 1.0;
    }
  }
  const CMatrix& h1 = model.dense_hamiltonian();
  const CMatrix g1 = model.dense_gamma();
  CMatrix h = CMatrix::Zero(dim, dim);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      h += h1(i, j) * lower[static_cast<std::size_t>(i)].adjoint() * lower[static_cast<std::size_t>(j)];
    }
  }
  const CMatrix hd = h.adjoint();

  auto rhs = [&](const CMatrix& rho) {
    CMatrix out = -kI * (h * rho - rho * hd);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (g1(i, j) == 0.0) continue;
        out += g1(i, j) * lower[static_cast<std::size_t>(j)] * rho *
               lower[static_cast<std::size_t>(i)].adjoint();
      }
    }
    return out;
  };

  CVector psi = CVector::Zero(dim);
  if (initial.manifold == 0) {
    psi(0) = 1.0;
  } else if (initial.manifold == 1) {
    for (int i = 0; i < m; ++i) psi(1 << i) = initial.amplitudes(i);
  } else {
    PairIndex idx(m);
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) psi((1 << i) | (1 << j)) = initial.amplitudes(idx.index(i, j));
    }
  }
  psi.normalize();
  CMatrix rho = psi * psi.adjoint();

  TrajectoryRecord rec;
  rec.times = t_grid;
  for (int i = 0; i < m; ++i) rec.names.push_back("pop_" + std::to_string(i));
  rec.names.push_back("total");
  rec.names.push_back("trace");
  rec.columns.assign(rec.names.size(), std::vector<double>(t_grid.size()));

  auto record = [&](std::size_t k) {
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      double p = 0.0;
      for (int b = 0; b < dim; ++b) {
        if (b & (1 << i)) p += rho(b, b).real();
      }
      rec.columns[static_cast<std::size_t>(i)][k] = p;
      total += p;
    }
    rec.columns[static_cast<std::size_t>(m)][k] = total;
    rec.columns[static_cast<std::size_t>(m + 1)][k] = rho.trace().real();
  };
  record(0);
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    const double span = t_grid[k] - t_grid[k - 1];
    const long n = std::max(1L, static_cast<long>(std::ceil(span / dt - 1e-9)));
    const double step = span / n;
    for (long s = 0; s < n; ++s) {
      const CMatrix k1 = rhs(rho);
      const CMatrix k2 = rhs(rho + 0.5 * step * k1);
      const CMatrix k3 = rhs(rho + 0.5 * step * k2);
      const CMatrix k4 = rhs(rho + step * k3);
      rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    record(k);
  }
  return rec;
}

}  // namespace awg
