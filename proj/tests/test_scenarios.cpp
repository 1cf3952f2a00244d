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
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "atomwg/config.hpp"
#include "atomwg/dispersion.hpp"
#include "atomwg/fit.hpp"
#include "atomwg/guided.hpp"
#include "atomwg/initial_states.hpp"
#include "atomwg/observables.hpp"
#include "atomwg/runner.hpp"
#include "atomwg/scenarios.hpp"

using namespace awg;
namespace fs = std::filesystem;

namespace {

ErrorCategory category_of(const std::function<void()>& f, std::string* what = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (what) *what = e.what();
    return e.category();
  }
  FAIL("expected an Error");
  return ErrorCategory::io;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("atomwg_" + name + "_" + std::to_string(std::random_device{}()));
  fs::create_directories(p);
  return p;
}

std::string strip_timestamp(ResultTable t) {
  t.metadata().erase("timestamp");
  return t.to_csv();
}

}  // namespace

TEST_CASE("fits recover synthetic parameters") {
  std::vector<double> x, y;
  for (int i = 0; i <= 40; ++i) {
    const double xi = -4.0 + 0.2 * i;
    const double u = 2.0 * (xi - 0.3) / 1.2;
    x.push_back(xi);
    y.push_back(1.0 - 0.8 / (1.0 + u * u));
  }
  const LorentzianFit f = fit_lorentzian(x, y);
  CHECK(f.converged);
  CHECK(std::abs(f.center - 0.3) < 1e-8);
  CHECK(std::abs(f.fwhm - 1.2) < 1e-8);
  CHECK(std::abs(f.amplitude + 0.8) < 1e-8);
  CHECK(std::abs(f.offset - 1.0) < 1e-8);

  // the same line seen through a three-point instrument spread
  const std::vector<double> shift{-0.5, 0.0, 0.7}, weight{1.0, 2.0, 1.0};
  std::vector<double> yb;
  for (double xi : x) {
    double v = 0.0;
    for (int m = 0; m < 3; ++m) {
      const double u = 2.0 * (xi + shift[m] - 0.3) / 1.2;
      v += weight[m] / 4.0 / (1.0 + u * u);
    }
    yb.push_back(1.0 - 0.8 * v);
  }
  const LorentzianFit fb = fit_lorentzian_broadened(x, yb, shift, weight);
  CHECK(std::abs(fb.fwhm - 1.2) < 1e-7);
  CHECK(std::abs(fb.center - 0.3) < 1e-7);
  CHECK(fit_lorentzian(x, yb).fwhm > 1.3);

  std::vector<double> px, py;
  for (double v : {50.0, 100.0, 200.0, 400.0, 800.0}) {
    px.push_back(v);
    py.push_back(7.0 * std::pow(v, -3.0));
  }
  const PowerLawFit p = fit_power_law(px, py);
  CHECK(std::abs(p.exponent + 3.0) < 1e-10);
  CHECK(p.prefactor == doctest::Approx(7.0).epsilon(1e-9));

  const ExponentialFit e = fit_exponential({0.0, 1.0, 2.0, 3.0}, {2.0, 2.0 * std::exp(-0.4), 2.0 * std::exp(-0.8),
                                                                   2.0 * std::exp(-1.2)});
  CHECK(e.rate == doctest::Approx(0.4).epsilon(1e-12));

  CHECK(category_of([] { fit_power_law({1, 2, 3, 4}, {1, -1, 1, 1}); }) == ErrorCategory::domain);
  CHECK(category_of([] { fit_lorentzian({1, 2}, {1, 2}); }) == ErrorCategory::domain);
}

TEST_CASE("registry and config validation") {
  CHECK(scenario_registry().size() == 12);
  std::set<std::string> names;
  for (const auto& s : scenario_registry()) {
    names.insert(s.name);
    CHECK_NOTHROW(resolve_config({{"scenario", s.name}}));
  }
  CHECK(names.size() == 12);

  std::string msg;
  CHECK(category_of([] { resolve_config({{"scenario", "nope"}}); }, &msg) == ErrorCategory::unknown_scenario);
  CHECK(msg.find("dispersion_curve") != std::string::npos);

  CHECK(category_of([] { resolve_config({{"scenario", "bic"}, {"chain", {{"n_atom", 3}}}}); }, &msg) ==
        ErrorCategory::config);
  CHECK(msg.find("/chain/n_atom") != std::string::npos);
  CHECK(category_of([] { resolve_config({{"scenario", "bic"}, {"chain", {{"d", "small"}}}}); }, &msg) ==
        ErrorCategory::config);
  CHECK(msg.find("/chain/d") != std::string::npos);
  CHECK(category_of([] { resolve_config({{"scenario", "bic"}, {"qubits", {{{"rho", 1.0}}}}}); }, &msg) ==
        ErrorCategory::config);
  CHECK(msg.find("/qubits/0/rho") != std::string::npos);

  // stochastic runs need a seed
  const json no_seed = {{"scenario", "two_qubit_multiphoton"}, {"evolution", {{"seed", nullptr}}}};
  CHECK(category_of([&] { resolve_config(no_seed); }, &msg) == ErrorCategory::config);
  CHECK(msg.find("seed") != std::string::npos);

  // qubits are filled from the template
  const json r = resolve_config({{"scenario", "bic"}, {"qubits", {{{"gamma0", 0.5}}}}});
  CHECK(r["qubits"][0]["gamma0"] == 0.5);
  CHECK(r["qubits"][0]["rho_over_d"] == 1.0);
  CHECK(r["qubits"][0]["above_band_edge"].is_null());

  const std::string text = "{\n  \"scenario\": \"bic\",\n  \"chain\": {\n    \"n_atom\": 3\n  }\n}\n";
  CHECK(locate_pointer(text, "/chain/n_atom") == 4);
  CHECK(category_of([] { parse_config_text("{\n \"a\": 1,\n}", "f.json"); }, &msg) == ErrorCategory::config);
  CHECK(msg.find("f.json:3") != std::string::npos);

  const CVec3 chiral = parse_dipole({{"d", "chiral"}}, "/d");
  CHECK(std::abs(chiral.norm() - 1.0) < 1e-15);
  CHECK(parse_dipole({{"d", "chiral_conj"}}, "/d").isApprox(chiral.conjugate()));
  CHECK(category_of([] { parse_dipole({{"d", "w"}}, "/d"); }) == ErrorCategory::config);
}

TEST_CASE("sweeps write one table per grid point") {
  const json cfg = {{"scenario", "dispersion_curve"},
                    {"params", {{"n_points", 11}}},
                    {"sweep", {{"/chain/d", {0.1, 0.15, 0.2}}, {"/params/n_points", {5, 7, 9}}}}};
  const std::vector<json> pts = expand_sweep(cfg);
  REQUIRE(pts.size() == 9);
  CHECK(pts[1]["params"]["n_points"] == 7);
  CHECK(pts[3]["chain"]["d"] == 0.15);
  CHECK(!pts[0].contains("sweep"));

  RunOptions opt;
  opt.out_dir = scratch("sweep");
  opt.threads = 2;
  const auto files = sweep_to_files(cfg, opt);
  CHECK(files.size() == 10);
  for (const auto& f : files) CHECK(fs::exists(f));
  std::ifstream in(opt.out_dir / "dispersion_curve_4.csv");
  std::stringstream ss;
  ss << in.rdbuf();
  const ResultTable t = ResultTable::from_csv(ss.str());
  CHECK(t.rows() == 7);
  CHECK(t.metadata()["config"]["chain"]["d"] == 0.15);
  fs::remove_all(opt.out_dir);

  const json bad = {{"scenario", "dispersion_curve"}, {"sweep", {{"/chain/spacing", {0.1, 0.2}}}}};
  CHECK(category_of([&] { expand_sweep(bad); }) == ErrorCategory::config);
}

TEST_CASE("reruns are reproducible") {
  const json cfg = {{"scenario", "two_qubit_multiphoton"},
                    {"chain", {{"n_atoms", 12}}},
                    {"qubits", {{{"rho_over_d", 0.4}, {"z_over_d", 0}, {"gamma0", 0.05}, {"resonant_k1d", 0.7}},
                                {{"rho_over_d", 0.4}, {"z_over_d", 11}, {"gamma0", 0.05}, {"resonant_k1d", 0.7}}}},
                    {"evolution", {{"t_end", 4.0}, {"dt_out", 1.0}, {"n_trajectories", 6}, {"seed", 3}}}};
  const ScenarioOutput a = run_scenario(cfg, {1, {}});
  const ScenarioOutput b = run_scenario(cfg, {2, {}});
  CHECK(strip_timestamp(a.table) == strip_timestamp(b.table));
  CHECK(a.table.metadata()["seed"] == 3);
  CHECK(a.table.metadata().contains("version"));

  // CSV round trip keeps values and metadata
  const ResultTable back = ResultTable::from_csv(a.table.to_csv());
  CHECK(back.names() == a.table.names());
  CHECK(back.column("q0_both") == a.table.column("q0_both"));
  CHECK(back.metadata() == a.table.metadata());
}

TEST_CASE("initial states") {
  const ChainGeometry chain(400, 0.1);
  const double k = 0.7 * kPi / 0.1;
  const PreparedState s = init_spin_wave(chain, k, 3.0, 20.0);
  CHECK(!s.truncated);
  CHECK(s.state.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
  const PacketSpectrum sp = packet_spectrum(s.state, chain, k, 0.2 * kPi / 0.1);
  std::size_t best = 0;
  for (std::size_t i = 1; i < sp.weight.size(); ++i) {
    if (sp.weight[i] > sp.weight[best]) best = i;
  }
  CHECK(std::abs(sp.k[best] - k) < 0.01 * k);
  CHECK(sp.mean_delta == doctest::Approx(delta_for_k1d(k, 0.1)).epsilon(0.05));

  CHECK(init_spin_wave(chain, k, 3.0, 1.0).truncated);
  CHECK(category_of([&] { init_spin_wave(chain, k, 0.05, 20.0); }) == ErrorCategory::domain);

  // counter-propagating pair placed symmetrically: mirror image of itself
  const int n = 80;
  const ChainGeometry c2(n, 0.1);
  const PreparedState two = init_two_photon(c2, k, 1.0, {2.0, 5.9}, n);
  CHECK(two.state.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(site_populations(two.state).sum() == doctest::Approx(2.0).epsilon(1e-12));
  const CMatrix c = pair_matrix(two.state);
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) worst = std::max(worst, std::abs(c(a, b) - c(n - 1 - b, n - 1 - a)));
  }
  CHECK(worst < 1e-12);
  CHECK(category_of([&] { init_two_photon(c2, k, 1.0, {2.0, 3.0}, n); }) == ErrorCategory::domain);
}

TEST_CASE("free packet moves at the group velocity") {
  const double d = 0.1;
  const double k = 0.7 * kPi / d;
  const ChainGeometry chain(1500, d);
  const EffectiveModel m = build_model(chain, {});
  State s = init_spin_wave(chain, k, 10.0, 110.0).state;
  auto centroid = [&](const State& x) {
    const RVector p = x.site_populations();
    double z = 0.0;
    for (int j = 0; j < chain.n_atoms(); ++j) z += p(j) * j * d;
    return z / p.sum();
  };
  const double z0 = centroid(s);
  Propagator prop(m, {});
  const double t = 40.0 / group_velocity(k, d);
  prop.advance(s, t);
  const double v = (z0 - centroid(s)) / t;  // positive k1d travels towards -z
  CHECK(v == doctest::Approx(group_velocity(k, d)).epsilon(0.03));
  CHECK(s.norm_sq() > 0.99);
}

TEST_CASE("far-detuned qubit transmits the packet") {
  const json cfg = {{"scenario", "transmission"},
                    {"chain", {{"n_atoms", 1500}}},
                    {"initial_state", {{"zeta", 100.0}}},
                    {"params", {{"packet_distance_sites", 400}, {"delta_min", 40.0}, {"delta_max", 40.0}, {"n_delta", 1}}}};
  const ScenarioOutput out = run_scenario(cfg);
  REQUIRE(out.table.rows() == 1);
  CHECK(out.table.column("transmission")[0] > 0.95);
  CHECK(std::abs(out.table.column("unitarity_residual")[0]) < 1e-6);
}
