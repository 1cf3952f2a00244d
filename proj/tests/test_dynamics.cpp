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

#include <algorithm>
#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "atomwg/greens.hpp"
#include "atomwg/lindblad.hpp"
#include "atomwg/observables.hpp"
#include "atomwg/trajectory.hpp"

using namespace awg;

namespace {

std::vector<Emitter> random_emitters(int m, unsigned seed, double box = 0.3) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(0.0, box);
  std::vector<Emitter> out(static_cast<std::size_t>(m));
  for (auto& e : out) e.position = Vec3(u(gen), u(gen), u(gen));
  return out;
}

PropagationOptions method(PropagationMethod m) {
  PropagationOptions o;
  o.method = m;
  return o;
}

// Hard-core two-excitation Hamiltonian written out pair by pair.
CMatrix dense_two_exc(const EffectiveModel& model) {
  const int m = model.size();
  const PairIndex idx(m);
  CMatrix h = CMatrix::Zero(idx.size(), idx.size());
  for (long p = 0; p < idx.size(); ++p) {
    const auto [i, j] = idx.pair(p);
    // sigma_a^+ sigma_b^- moves the excitation at b to a
    for (int a = 0; a < m; ++a) {
      if (a != j) h(a == i ? p : idx.index(a, j), p) += model.element(a, i);
      if (a != i) h(a == j ? p : idx.index(i, a), p) += model.element(a, j);
    }
  }
  return h;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("model assembly") {
  const ChainGeometry chain(100, 0.1);
  ImpurityQubit q;
  q.rho_q = 0.05;
  q.z_q = 2.0;
  q.gamma0_q = 0.02;
  q.detuning_q = 0.3;
  const EffectiveModel m = build_model(chain, {q});
  CHECK(m.size() == 101);
  CHECK(m.qubit_index(0) == 100);
  const auto& e = m.emitters();
  CHECK(std::abs(m.element(3, 17) - coupling_element(e[3], e[17])) < 1e-12);
  CHECK(std::abs(m.element(100, 40) - coupling_element(e[100], e[40])) < 1e-12);
  CHECK(std::abs(m.element(100, 100) - cplx(0.3, -0.01)) < 1e-14);
  CHECK(std::abs(m.element(5, 5) - cplx(0.0, -0.5)) < 1e-14);
  // trace of Gamma equals the sum of bare linewidths
  CHECK(m.dense_hamiltonian().trace().imag() == doctest::Approx(-0.5 * (100 + 0.02)).epsilon(1e-12));
  CHECK(m.dense_gamma().trace().real() == doctest::Approx(100.02).epsilon(1e-12));

  // the FFT path agrees with the dense matrix
  std::mt19937 gen(3);
  std::normal_distribution<double> g;
  CVector x(m.size()), y;
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = cplx(g(gen), g(gen));
  m.apply(x, y);
  CHECK((y - m.dense_hamiltonian() * x).norm() < 1e-10 * y.norm());

  const JumpBasis& jb = m.jump_basis();
  CHECK(jb.rates.minCoeff() > -1e-10);
  CHECK(jb.rates.sum() == doctest::Approx(100.02).epsilon(1e-10));
}

TEST_CASE("free decay") {
  const EffectiveModel one = build_model(std::vector<Emitter>{Emitter{}});
  const auto grid = time_grid(5.0, 0.5);
  const Observer obs = population_observer(site_groups(1));
  for (auto meth : {PropagationMethod::eigen, PropagationMethod::rk4, PropagationMethod::krylov}) {
    const TrajectoryRecord r = propagate_no_jump(excite_site(1, 0), one, grid, obs, method(meth));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(r.column("norm")[i] == doctest::Approx(std::exp(-grid[i])).epsilon(1e-9));
    }
  }

  // near-coincident pair: symmetric state decays at 1 + Gamma_12
  std::vector<Emitter> pair(2);
  pair[1].position = Vec3(0.0, 0.0, 0.01);
  const EffectiveModel pm = build_model(pair);
  const double g12 = pm.dense_gamma()(0, 1).real();
  CHECK(g12 > 0.99);
  CVector c(2);
  c << 1.0, 1.0;
  const TrajectoryRecord r =
      propagate_no_jump(single_excitation(c / std::sqrt(2.0)), pm, {0.0, 1.0}, population_observer({}),
                        method(PropagationMethod::eigen));
  CHECK(r.column("norm")[1] == doctest::Approx(std::exp(-(1.0 + g12))).epsilon(1e-9));
}

TEST_CASE("propagation methods agree") {
  ImpurityQubit q;
  q.rho_q = 0.04;
  q.z_q = 2.5;
  q.gamma0_q = 0.05;
  const EffectiveModel m = build_model(ChainGeometry(50, 0.1), {q});
  const auto grid = time_grid(3.0, 0.5);
  const Observer obs = population_observer(qubit_groups(m));
  const State s = excite_site(m.size(), m.qubit_index(0));
  const TrajectoryRecord a = propagate_no_jump(s, m, grid, obs, method(PropagationMethod::eigen));
  const TrajectoryRecord b = propagate_no_jump(s, m, grid, obs, method(PropagationMethod::rk4));
  const TrajectoryRecord c = propagate_no_jump(s, m, grid, obs, method(PropagationMethod::krylov));
  for (const char* col : {"norm", "q0"}) {
    CHECK(max_diff(a.column(col), b.column(col)) < 1e-8);
    CHECK(max_diff(a.column(col), c.column(col)) < 1e-8);
  }
}

TEST_CASE("two-excitation manifold") {
  const EffectiveModel m = build_model(random_emitters(8, 11));
  const CMatrix h2 = dense_two_exc(m);
  std::mt19937 gen(5);
  std::normal_distribution<double> g;
  CVector x(h2.rows());
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = cplx(g(gen), g(gen));
  const State s = pair_state(8, x.normalized());
  const State hs = apply_hamiltonian_two_exc(s, m);
  CHECK((hs.amplitudes - h2 * s.amplitudes).norm() < 1e-10 * hs.amplitudes.norm());

  const CVector exact = (cplx(0.0, -0.7) * h2).exp() * s.amplitudes;
  for (auto meth : {PropagationMethod::krylov, PropagationMethod::rk4}) {
    State t = s;
    Propagator p(m, method(meth));
    p.advance(t, 0.7);
    CHECK((t.amplitudes - exact).norm() < 1e-8);
  }

  // two emitters: the only pair amplitude evolves with H_00 + H_11
  const EffectiveModel two = build_model(random_emitters(2, 4));
  State both = excite_pair(2, 0, 1);
  Propagator p(two, {});
  p.advance(both, 1.3);
  const cplx expected = std::exp(cplx(0.0, -1.3) * (two.element(0, 0) + two.element(1, 1)));
  CHECK(std::abs(both.amplitudes(0) - expected) < 1e-10);
  CHECK(two_exc_population(both) == doctest::Approx(std::exp(-2.6)).epsilon(1e-9));
}

TEST_CASE("jump times of a single atom are exponential") {
  const EffectiveModel one = build_model(std::vector<Emitter>{Emitter{}});
  const std::vector<double> grid{0.0, 40.0};
  const Observer obs = population_observer({});
  const int n = 10000;
  std::vector<double> t;
  for (int i = 0; i < n; ++i) {
    const TrajectoryRecord r = sample_trajectory(excite_site(1, 0), one, grid, 99u ^ static_cast<unsigned>(i), obs);
    REQUIRE(r.jumps.size() == 1);
    CHECK(r.jumps[0].manifold_before == 1);
    CHECK(r.jumps[0].manifold_after == 0);
    t.push_back(r.jumps[0].time);
  }
  std::sort(t.begin(), t.end());
  double dmax = 0.0;
  for (int i = 0; i < n; ++i) {
    const double f = 1.0 - std::exp(-t[static_cast<std::size_t>(i)]);
    dmax = std::max({dmax, std::abs(f - double(i) / n), std::abs(f - double(i + 1) / n)});
  }
  // Kolmogorov critical value for p = 0.01
  CHECK(dmax * std::sqrt(double(n)) < 1.628);
}

TEST_CASE("trajectory ensemble reproduces the master equation") {
  const EffectiveModel m = build_model(random_emitters(3, 21));
  const auto grid = time_grid(3.0, 0.5);
  const State s0 = excite_pair(3, 0, 2);
  const TrajectoryRecord ref = lindblad_reference(m, s0, grid);
  for (double tr : ref.column("trace")) CHECK(std::abs(tr - 1.0) < 1e-8);
  const EnsembleResult e = run_ensemble(s0, m, grid, 2024, 4000, population_observer(site_groups(3)), 2);
  for (int k = 0; k < 3; ++k) {
    const std::string name = "pop_" + std::to_string(k);
    const auto it = std::find(e.names.begin(), e.names.end(), name);
    REQUIRE(it != e.names.end());
    const auto c = static_cast<std::size_t>(it - e.names.begin());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double se = std::max(e.std_error[c][i], 1e-3);
      CHECK(std::abs(e.mean[c][i] - ref.column(name)[i]) < 4.0 * se);
    }
  }
}

TEST_CASE("subradiant pair under the master equation") {
  std::vector<Emitter> pair(2);
  pair[1].position = Vec3(0.0, 0.0, 0.05);
  const EffectiveModel m = build_model(pair);
  CVector c(2);
  c << 1.0, -1.0;
  const State s = single_excitation(c / std::sqrt(2.0));
  const auto grid = time_grid(4.0, 1.0);
  const TrajectoryRecord ref = lindblad_reference(m, s, grid);
  const TrajectoryRecord nj = propagate_no_jump(s, m, grid, population_observer({}), method(PropagationMethod::eigen));
  // a single excitation only loses weight through jumps to the ground state
  CHECK(max_diff(ref.column("total"), nj.column("total")) < 1e-8);
  CHECK(ref.column("total").back() > 0.5);
}

TEST_CASE("determinism and no-jump equivalence") {
  const EffectiveModel m = build_model(random_emitters(4, 8));
  const auto grid = time_grid(2.0, 0.25);
  const Observer obs = population_observer(site_groups(4));
  const State s0 = excite_pair(4, 1, 3);

  TrajectoryOptions off;
  off.jumps = false;
  const TrajectoryRecord a = sample_trajectory(s0, m, grid, 1, obs, off);
  const TrajectoryRecord b = propagate_no_jump(s0, m, grid, obs);
  CHECK(a.columns == b.columns);

  const TrajectoryRecord r1 = sample_trajectory(s0, m, grid, 77, obs);
  const TrajectoryRecord r2 = sample_trajectory(s0, m, grid, 77, obs);
  CHECK(r1.columns == r2.columns);
  CHECK(r1.jumps.size() == r2.jumps.size());

  const EnsembleResult e1 = run_ensemble(s0, m, grid, 5, 40, obs, 1);
  const EnsembleResult e3 = run_ensemble(s0, m, grid, 5, 40, obs, 3);
  CHECK(e1.mean == e3.mean);
  CHECK(e1.std_error == e3.std_error);
  CHECK(e1.n_jumps == e3.n_jumps);
}

TEST_CASE("mirror-symmetric emission has zero chirality") {
  ImpurityQubit q;
  q.rho_q = 0.04;
  q.z_q = 5.0;
  q.gamma0_q = 0.01;
  const EffectiveModel m = build_model(ChainGeometry(101, 0.1), {q});
  State s = excite_site(m.size(), m.qubit_index(0));
  Propagator p(m, {});
  p.advance(s, 3.0);
  const auto c = chirality(s, m, 0);
  REQUIRE(c.has_value());
  CHECK(std::abs(*c) < 1e-8);
}
