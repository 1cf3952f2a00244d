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

#include "atomwg/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include <Eigen/Eigenvalues>

#include "atomwg/dispersion.hpp"
#include "atomwg/fit.hpp"
#include "atomwg/model.hpp"
#include "scenario_util.hpp"

namespace awg {

namespace detail {

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!first) first = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first) std::rethrow_exception(first);
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw Error(ErrorCategory::config, "grid needs at least one point");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

std::vector<ImpurityQubit> qubits_from_config(const json& cfg, double d) {
  std::vector<ImpurityQubit> out;
  const json& q = cfg.at("qubits");
  for (std::size_t i = 0; i < q.size(); ++i) out.push_back(qubit_from_config(q[i], d, "/qubits/" + std::to_string(i)));
  return out;
}

std::vector<int> local_maxima(const std::vector<double>& y, double min_prominence) {
  std::vector<int> peaks;
  if (y.empty()) return peaks;
  double lo = y[0], hi = y[0];
  int hi_at = 0;
  bool rising = true;  // looking for a maximum
  bool armed = false;  // rose enough since the last minimum
  for (int i = 1; i < static_cast<int>(y.size()); ++i) {
    const double v = y[static_cast<std::size_t>(i)];
    if (rising) {
      if (v > hi) {
        hi = v;
        hi_at = i;
      }
      if (hi - lo >= min_prominence) armed = true;
      if (armed && hi - v >= min_prominence) {
        peaks.push_back(hi_at);
        rising = false;
        armed = false;
        lo = v;
      } else if (!armed && v < lo) {
        lo = v;
        hi = v;
        hi_at = i;
      }
    } else {
      if (v < lo) lo = v;
      if (v - lo >= min_prominence) {
        rising = true;
        armed = true;
        hi = v;
        hi_at = i;
      }
    }
  }
  return peaks;
}

void log(const RunContext& ctx, const std::string& msg) {
  if (ctx.log) ctx.log(msg);
}

}  // namespace detail

namespace {

using detail::linspace;

ScenarioOutput run_dispersion_curve(const json& cfg, const RunContext&) {
  const double d = get_number(cfg, "/chain/d");
  validate_spacing(d);
  const int n = get_int(cfg, "/params/n_points");
  const int terms = get_int(cfg, "/params/lattice_sum_terms");
  if (n < 2) throw Error(ErrorCategory::config, "/params/n_points: need at least 2");
  const CVec3 pol = parse_dipole(cfg, "/chain/polarization");
  const double nan = std::numeric_limits<double>::quiet_NaN();

  ResultTable t;
  std::vector<std::string> names = {"kz_d_over_pi", "kz", "re_delta", "im_delta", "v_g"};
  if (terms > 0) {
    names.push_back("re_delta_sum");
    names.push_back("im_delta_sum");
  }
  t.set_columns(names);
  for (double x : linspace(-1.0, 1.0, n)) {
    const double kz = x * kPi / d;
    const cplx w = omega_of_kz(kz, d);
    const double vg = std::abs(kz) > kK0 ? group_velocity(kz, d) : nan;
    std::vector<double> row = {x, kz, w.real(), w.imag(), vg};
    if (terms > 0) {
      const cplx s = omega_of_kz_sum(kz, d, terms, pol);
      row.push_back(s.real());
      row.push_back(s.imag());
    }
    t.add_row(row);
  }
  const BandEdges e = band_edges(d);
  t.metadata()["results"] = {{"delta_lightline", e.delta_lightline},
                             {"delta_zone_edge", e.delta_zone_edge},
                             {"delta_min", e.delta_min},
                             {"delta_max", e.delta_max}};
  return {std::move(t), {}};
}

ScenarioOutput run_subradiance(const json& cfg, const RunContext& ctx) {
  const double d = get_number(cfg, "/chain/d");
  const std::vector<double> ns = get_numbers(cfg, "/params/n_values");
  const CVec3 pol = parse_dipole(cfg, "/chain/polarization");
  std::vector<double> rate(ns.size()), gmin(ns.size());
  detail::parallel_for(static_cast<int>(ns.size()), ctx.threads, [&](int i) {
    const int n = static_cast<int>(ns[static_cast<std::size_t>(i)]);
    if (n < 2 || n > 2500) throw Error(ErrorCategory::size, "/params/n_values: chain sizes must lie in [2, 2500]");
    const EffectiveModel m = build_model(ChainGeometry(n, d, pol), {});
    // slowest-decaying eigenmode of the effective Hamiltonian
    Eigen::ComplexEigenSolver<CMatrix> es(m.dense_hamiltonian(), false);
    rate[static_cast<std::size_t>(i)] = -2.0 * es.eigenvalues().imag().maxCoeff();
    Eigen::SelfAdjointEigenSolver<CMatrix> gs(m.dense_gamma(), Eigen::EigenvaluesOnly);
    gmin[static_cast<std::size_t>(i)] = gs.eigenvalues().minCoeff();
  });
  ResultTable t;
  t.add_column("n_atoms", ns);
  t.add_column("min_rate", rate);
  t.add_column("min_gamma_eigenvalue", gmin);
  if (ns.size() >= 4) {
    const PowerLawFit f = fit_power_law(ns, rate);
    t.metadata()["results"] = {{"exponent", -f.exponent}, {"exponent_stderr", f.exponent_stderr}, {"prefactor", f.prefactor}};
  }
  return {std::move(t), {}};
}

std::vector<ScenarioInfo> build_registry() {
  std::vector<ScenarioInfo> r;
  r.push_back({"dispersion_curve",
               "complex Bloch band Re/Im delta(k_z) and group velocity across the zone",
               {{"scenario", "dispersion_curve"},
                {"chain", {{"d", 0.1}, {"polarization", "z"}}},
                {"params", {{"n_points", 201}, {"lattice_sum_terms", 0}}}},
               run_dispersion_curve});
  detail::register_guided_scenarios(r);
  detail::register_dynamics_scenarios(r);
  r.push_back({"subradiance_scaling",
               "slowest single-excitation decay rate of a bare chain versus N",
               {{"scenario", "subradiance_scaling"},
                {"chain", {{"d", 0.1}, {"polarization", "z"}}},
                {"params", {{"n_values", {50, 100, 200, 400}}}}},
               run_subradiance});
  return r;
}

void overlay(json& base, const json& patch) {
  if (!patch.is_object() || !base.is_object()) {
    base = patch;
    return;
  }
  for (const auto& [k, v] : patch.items()) {
    if (base.contains(k)) {
      overlay(base[k], v);
    } else {
      base[k] = v;
    }
  }
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_registry() {
  static const std::vector<ScenarioInfo> r = build_registry();
  return r;
}

const ScenarioInfo& find_scenario(const std::string& name) {
  for (const auto& s : scenario_registry()) {
    if (s.name == name) return s;
  }
  std::string names;
  for (const auto& s : scenario_registry()) names += (names.empty() ? "" : ", ") + s.name;
  throw Error(ErrorCategory::unknown_scenario, "unknown scenario '" + name + "'; registered: " + names);
}

json resolve_config(const json& user) {
  if (!user.is_object()) throw Error(ErrorCategory::config, "/: config must be a JSON object");
  const std::string name = get_string(user, "/scenario");
  const ScenarioInfo& info = find_scenario(name);
  json patch = user;
  patch.erase("sweep");
  json cfg = info.defaults;
  overlay(cfg, patch);

  json body = cfg, tmpl = info.defaults;
  body.erase("qubits");
  tmpl.erase("qubits");
  check_against_template(body, tmpl);
  if (cfg.contains("qubits")) {
    if (!cfg["qubits"].is_array()) throw Error(ErrorCategory::config, "/qubits: expected array");
    for (std::size_t i = 0; i < cfg["qubits"].size(); ++i) {
      json& q = cfg["qubits"][i];
      const std::string p = "/qubits/" + std::to_string(i);
      if (!q.is_object()) throw Error(ErrorCategory::config, p + ": expected object");
      json full = qubit_template();
      overlay(full, q);
      check_against_template(full, qubit_template(), p);
      q = full;
    }
  } else if (user.contains("qubits")) {
    throw Error(ErrorCategory::config, "/qubits: unknown key");
  }
  if (cfg.contains("evolution") && cfg["evolution"].contains("n_trajectories")) {
    const int n = get_int(cfg, "/evolution/n_trajectories");
    if (n < 0) throw Error(ErrorCategory::config, "/evolution/n_trajectories: must be >= 0");
    if (n > 0 && cfg["evolution"]["seed"].is_null()) {
      throw Error(ErrorCategory::config, "/evolution/seed: required when n_trajectories > 0");
    }
  }
  if (cfg.contains("evolution") && cfg["evolution"].contains("method")) {
    try {
      parse_method(get_string(cfg, "/evolution/method"));
    } catch (const Error& e) {
      throw Error(ErrorCategory::config, std::string("/evolution/method: ") + e.what());
    }
  }
  return cfg;
}

ScenarioOutput run_scenario(const json& user_config, const RunContext& ctx) {
  const json cfg = resolve_config(user_config);
  const ScenarioInfo& info = find_scenario(cfg.at("scenario").get<std::string>());
  const auto t0 = std::chrono::steady_clock::now();
  ScenarioOutput out = info.run(cfg, ctx);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json seed = nullptr;
  if (cfg.contains("evolution") && cfg["evolution"].contains("seed")) seed = cfg["evolution"]["seed"];
  auto stamp = [&](ResultTable& t) {
    auto& m = t.metadata();
    m["scenario"] = info.name;
    m["config"] = cfg;
    m["version"] = ATOMWG_VERSION;
    m["seed"] = seed;
    m["timestamp"] = {{"utc", utc_now()}, {"wall_time_s", wall}};
  };
  stamp(out.table);
  for (auto& [name, t] : out.extra) stamp(t);
  return out;
}

}  // namespace awg
