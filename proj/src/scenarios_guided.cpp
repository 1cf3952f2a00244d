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

// Analytic coupling scenarios: decay-rate maps and magic points.

#include <cmath>

#include "atomwg/dispersion.hpp"
#include "atomwg/guided.hpp"
#include "scenario_util.hpp"

namespace awg::detail {

namespace {

double band_delta(const json& cfg, double d) {
  const double k = get_number(cfg, "/params/k1d");
  if (!(k * kPi / d > kK0 && k <= 1.0)) throw Error(ErrorCategory::config, "/params/k1d: must be a guided wave-vector (in pi/d)");
  return delta_for_k1d(k * kPi / d, d);
}

ScenarioOutput run_decay_map(const json& cfg, const RunContext& ctx) {
  const double d = get_number(cfg, "/chain/d");
  validate_spacing(d);
  const double delta = band_delta(cfg, d);
  const CVec3 dip = parse_dipole(cfg, "/params/dipole");
  std::vector<double> rho = linspace(get_number(cfg, "/params/rho_min_over_d"), get_number(cfg, "/params/rho_max_over_d"),
                                     get_int(cfg, "/params/n_rho"));
  std::vector<double> z = linspace(get_number(cfg, "/params/z_min_over_d"), get_number(cfg, "/params/z_max_over_d"),
                                   get_int(cfg, "/params/n_z"));
  for (double& r : rho) r *= d;
  for (double& v : z) v *= d;
  ResultTable t = scan_decay_rates(d, delta, rho, z, dip, ctx.threads);
  std::vector<double> ro, zo;
  for (double r : t.column("rho_q")) ro.push_back(r / d);
  for (double v : t.column("z_q")) zo.push_back(v / d);
  t.add_column("rho_over_d", ro);
  t.add_column("z_over_d", zo);
  t.metadata()["results"] = {{"delta", delta}, {"v_g", group_velocity(get_number(cfg, "/params/k1d") * kPi / d, d)}};
  return {std::move(t), {}};
}

ScenarioOutput run_magic_point(const json& cfg, const RunContext& ctx) {
  const double d = get_number(cfg, "/chain/d");
  validate_spacing(d);
  const double delta = band_delta(cfg, d);
  const CVec3 dip = parse_dipole(cfg, "/params/dipole");
  const std::vector<double> rho = linspace(get_number(cfg, "/params/rho_min_over_d"),
                                           get_number(cfg, "/params/rho_max_over_d"), get_int(cfg, "/params/n_rho"));
  const std::size_t n = rho.size();
  std::vector<CouplingRates> mid(n), site(n);
  parallel_for(static_cast<int>(n), ctx.threads, [&](int i) {
    ImpurityQubit q;
    q.rho_q = rho[static_cast<std::size_t>(i)] * d;
    q.dipole = dip;
    site[static_cast<std::size_t>(i)] = coupling_rates(q, d, delta);
    q.z_q = 0.5 * d;
    mid[static_cast<std::size_t>(i)] = coupling_rates(q, d, delta);
  });
  ResultTable t;
  t.set_columns({"rho_over_d", "gamma_free_mid", "gamma_free_site", "gamma_1d_mid", "gamma_1d_site",
                 "optical_depth_mid", "optical_depth_site"});
  for (std::size_t i = 0; i < n; ++i) {
    t.add_row({rho[i], mid[i].gamma_free, site[i].gamma_free, mid[i].gamma_1d, site[i].gamma_1d,
               mid[i].optical_depth, site[i].optical_depth});
  }
  // strict interior minima of the mid-cell cut
  json minima = json::array();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (mid[i].gamma_free < mid[i - 1].gamma_free && mid[i].gamma_free < mid[i + 1].gamma_free) {
      minima.push_back({{"rho_over_d", rho[i]}, {"gamma_free", mid[i].gamma_free},
                        {"suppression", site[i].gamma_free / mid[i].gamma_free}});
    }
  }
  const MagicPoint mp = find_magic_point(d, delta, dip);
  ImpurityQubit q0;
  q0.rho_q = mp.rho;
  q0.dipole = dip;
  const double at_site = gamma_free_space(q0, d, delta);
  t.metadata()["results"] = {{"cut_minima", minima},
                             {"magic_rho_over_d", mp.rho / d},
                             {"magic_z_over_d", mp.z / d},
                             {"magic_gamma_free", mp.gamma_free},
                             {"magic_optical_depth", mp.optical_depth},
                             {"suppression_vs_site", at_site / mp.gamma_free}};
  return {std::move(t), {}};
}

}  // namespace

void register_guided_scenarios(std::vector<ScenarioInfo>& out) {
  out.push_back({"decay_map",
                 "guided and free-space qubit decay rates and optical depth over (rho, z)",
                 {{"scenario", "decay_map"},
                  {"chain", {{"d", 0.1}}},
                  {"params",
                   {{"k1d", 0.7},
                    {"dipole", "z"},
                    {"rho_min_over_d", 0.2},
                    {"rho_max_over_d", 2.0},
                    {"n_rho", 19},
                    {"z_min_over_d", -0.5},
                    {"z_max_over_d", 0.5},
                    {"n_z", 11}}}},
                 run_decay_map});
  out.push_back({"magic_point",
                 "free-space rate along rho at mid-cell and on-site, plus the located magic point",
                 {{"scenario", "magic_point"},
                  {"chain", {{"d", 0.1}}},
                  {"params",
                   {{"k1d", 0.7}, {"dipole", "z"}, {"rho_min_over_d", 0.2}, {"rho_max_over_d", 1.0}, {"n_rho", 33}}}},
                 run_magic_point});
}

}  // namespace awg::detail
