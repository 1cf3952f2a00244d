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

// Time-domain scenarios on chain + qubit models.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "atomwg/dispersion.hpp"
#include "atomwg/fit.hpp"
#include "atomwg/guided.hpp"
#include "atomwg/initial_states.hpp"
#include "atomwg/observables.hpp"
#include "atomwg/trajectory.hpp"
#include "scenario_util.hpp"

namespace awg::detail {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCategory::config, msg); }

double guided_k(const json& cfg, const std::string& pointer, double d) {
  const double k = get_number(cfg, pointer);
  if (!(k * kPi / d > kK0 && k <= 1.0)) config_error(pointer + ": must be a guided wave-vector in units of pi/d");
  return k * kPi / d;
}

std::vector<int> int_list(const json& cfg, const std::string& pointer) {
  std::vector<int> out;
  for (double v : get_numbers(cfg, pointer)) out.push_back(static_cast<int>(v));
  return out;
}

/// Qubits listed in /initial_state/qubits start excited (one or two).
State inverted_state(const EffectiveModel& m, const std::vector<int>& which) {
  for (int q : which) {
    if (q < 0 || q >= m.n_extra()) config_error("/initial_state/qubits: qubit index out of range");
  }
  if (which.size() == 1) return excite_site(m.size(), m.qubit_index(which[0]));
  if (which.size() == 2 && which[0] != which[1]) {
    return excite_pair(m.size(), m.qubit_index(which[0]), m.qubit_index(which[1]));
  }
  config_error("/initial_state/qubits: invert one or two distinct qubits");
}

std::vector<PopulationGroup> chain_and_qubits(const EffectiveModel& m) {
  std::vector<PopulationGroup> g = qubit_groups(m);
  PopulationGroup chain{"chain", {}};
  chain.sites.resize(static_cast<std::size_t>(m.n_chain()));
  std::iota(chain.sites.begin(), chain.sites.end(), 0);
  g.push_back(chain);
  return g;
}

std::vector<double> output_grid(const json& cfg, double t_end) {
  const double dt = get_number(cfg, "/evolution/dt_out");
  if (!(t_end > 0.0)) config_error("/evolution/t_end: must be positive");
  if (!(dt > 0.0)) config_error("/evolution/dt_out: must be positive");
  return time_grid(t_end, dt);
}

// ---------------------------------------------------------------------------
// Packet-through-qubits layout. The packet starts at larger z and moves
// towards -z; qubit 0 sits closest to it.

struct Layout {
  int first = 0;   // site of qubit 0
  int last = 0;    // site of the last qubit
  int packet = 0;  // packet center site
  int clear = 0;   // clearance in sites
};

/// \`clearance\` (in zeta) keeps the packet tail off the far chain end and sets
/// how far the transmitted centroid must travel past the last qubit;
/// \`tail\` (in zeta) is the room left beyond that point.
Layout packet_layout(int n_atoms, int n_qubits, int spacing, int distance, double zeta_sites, double clearance,
                     double tail_zeta) {
  if (n_qubits < 1) config_error("/params/n_qubits: need at least one qubit");
  if (spacing < 1 && n_qubits > 1) config_error("/params/qubit_spacing_sites: must be positive");
  if (distance < 1) config_error("/params/packet_distance_sites: must be positive");
  Layout l;
  l.clear = static_cast<int>(std::ceil(clearance * zeta_sites));
  l.first = n_atoms - 1 - distance - l.clear;
  l.last = l.first - (n_qubits - 1) * spacing;
  l.packet = l.first + distance;
  const int tail = l.last - l.clear - static_cast<int>(std::ceil(tail_zeta * zeta_sites));
  if (tail < 0) {
    config_error("chain too short for this layout: add " + std::to_string(-tail) +
                 " atoms or shorten packet_distance_sites / zeta");
  }
  return l;
}

struct Dressed {
  std::vector<ImpurityQubit> qubits;
  ImpurityQubit base;
};

Dressed place_qubits(const json& cfg, double d, const Layout& l, int n_qubits, int spacing) {
  if (cfg.at("qubits").size() != 1) config_error("/qubits: this scenario takes one template qubit");
  Dressed out;
  out.base = qubit_from_config(cfg["qubits"][0], d, "/qubits/0");
  for (int q = 0; q < n_qubits; ++q) {
    ImpurityQubit x = out.base;
    x.z_q = (l.first - q * spacing) * d + out.base.z_q;  // z_over_d is an offset from the site
    out.qubits.push_back(x);
  }
  return out;
}

ScenarioOutput run_transmission(const json& cfg, const RunContext& ctx) {
  const ChainGeometry chain = chain_from_config(cfg);
  const double d = chain.spacing();
  const int n = chain.n_atoms();
  const double k = guided_k(cfg, "/initial_state/k1d", d);
  const double zeta = get_number(cfg, "/initial_state/zeta") * d;
  const int nq = get_int(cfg, "/params/n_qubits");
  const int spacing = get_int(cfg, "/params/qubit_spacing_sites");
  const Layout l = packet_layout(n, nq, spacing, get_int(cfg, "/params/packet_distance_sites"), zeta / d,
                                 get_number(cfg, "/params/clearance_zeta"), 2.0);
  Dressed dq = place_qubits(cfg, d, l, nq, spacing);

  const double w_packet = delta_for_k1d(k, d);
  const double vg = group_velocity(k, d);
  const CouplingRates rates = coupling_rates(dq.base, d, w_packet);
  const double width = dq.base.gamma0_q * (nq * rates.gamma_1d + rates.gamma_free);
  const std::vector<double> grid = linspace(get_number(cfg, "/params/delta_min"), get_number(cfg, "/params/delta_max"),
                                            get_int(cfg, "/params/n_delta"));
  const double t_meas = (l.packet - l.last + l.clear) * d / vg;
  const PropagationOptions opt = propagation_from_config(cfg);
  const PreparedState init = init_spin_wave(chain, k, zeta, l.packet * d, n + nq);

  struct Row {
    double t, r, loss, mid;
  };
  std::vector<Row> rows(grid.size());
  parallel_for(static_cast<int>(grid.size()), ctx.threads, [&](int i) {
    std::vector<ImpurityQubit> qs = dq.qubits;
    // delta = packet frequency minus qubit frequency
    for (auto& q : qs) q.detuning_q = dq.base.detuning_q - grid[static_cast<std::size_t>(i)] * width;
    const EffectiveModel m = build_model(chain, qs);
    State s = init.state;
    Propagator p(m, opt);
    p.advance(s, t_meas);
    const RVector pop = s.site_populations();
    Row r{0, 0, 1.0 - s.norm_sq(), 0};
    for (int j = 0; j < m.size(); ++j) {
      if (j < l.last) {
        r.t += pop(j);
      } else if (j > l.first && j < n) {
        r.r += pop(j);
      } else {
        r.mid += pop(j);
      }
    }
    rows[static_cast<std::size_t>(i)] = r;
    log(ctx, "transmission point " + std::to_string(i + 1) + "/" + std::to_string(grid.size()));
  });

  ResultTable t;
  t.set_columns({"delta", "delta_over_width", "transmission", "reflection", "loss", "in_flight", "unitarity_residual"});
  std::vector<double> xs, ts;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Row& r = rows[i];
    t.add_row({grid[i] * width, grid[i], r.t, r.r, r.loss, r.mid, r.t + r.r + r.loss + r.mid - 1.0});
    xs.push_back(grid[i] * width);
    ts.push_back(r.t);
  }
  json res = {{"gamma_1d", rates.gamma_1d},
              {"gamma_free", rates.gamma_free},
              {"predicted_width", width},
              {"v_g", vg},
              {"t_measure", t_meas},
              {"qubit_sites", {l.first, l.last}},
              {"packet_site", l.packet},
              {"n_atoms_nominal", 4000},
              {"n_atoms", n},
              {"packet_truncated", init.truncated}};
  if (xs.size() >= 8) {
    const LorentzianFit raw = fit_lorentzian(xs, ts);
    // the packet's own bandwidth broadens the dip; fit with it as kernel
    const PacketSpectrum sp = packet_spectrum(init.state, chain, k, 8.0 / zeta);
    std::vector<double> shift;
    for (double v : sp.delta) shift.push_back(v - w_packet);
    const LorentzianFit f = fit_lorentzian_broadened(xs, ts, shift, sp.weight);
    res["fit"] = {{"fwhm", f.fwhm},       {"center", f.center},          {"amplitude", f.amplitude},
                  {"offset", f.offset},   {"converged", f.converged},    {"width_ratio", f.fwhm / width},
                  {"fwhm_raw", raw.fwhm}, {"width_ratio_raw", raw.fwhm / width}};
  }
  t.metadata()["results"] = res;
  return {std::move(t), {}};
}

ScenarioOutput run_time_delay(const json& cfg, const RunContext& ctx) {
  const ChainGeometry chain = chain_from_config(cfg);
  const double d = chain.spacing();
  const int n = chain.n_atoms();
  const double zeta = get_number(cfg, "/initial_state/zeta") * d;
  const int nq = get_int(cfg, "/params/n_qubits");
  const int spacing = get_int(cfg, "/params/qubit_spacing_sites");
  const Layout l = packet_layout(n, nq, spacing, get_int(cfg, "/params/packet_distance_sites"), zeta / d, 3.0, -2.0);
  Dressed dq = place_qubits(cfg, d, l, nq, spacing);

  // packet frequency sits below the (chain-dressed) qubit frequency
  const ImpurityQubit& b = dq.base;
  const double dressed = b.detuning_q + b.gamma0_q * coherent_shift(b, d, b.detuning_q);
  const double w_packet = dressed - get_number(cfg, "/initial_state/detuning_below") * b.gamma0_q;
  const double k = find_k1d(w_packet, d).k1d;
  const double vg = group_velocity(k, d);
  double t_end = get_number(cfg, "/evolution/t_end");
  if (t_end <= 0.0) t_end = ((l.packet - l.last) * d + 2.0 * zeta) / vg;

  const EffectiveModel m = build_model(chain, dq.qubits);
  const PreparedState init = init_spin_wave(chain, k, zeta, l.packet * d, m.size());
  const TrajectoryRecord rec = propagate_no_jump(init.state, m, output_grid(cfg, t_end),
                                                 population_observer(chain_and_qubits(m)), propagation_from_config(cfg));
  (void)ctx;
  ResultTable t = rec.to_table();
  json peaks = json::array();
  for (int q = 0; q < nq; ++q) {
    const auto& y = rec.column("q" + std::to_string(q));
    const auto it = std::max_element(y.begin(), y.end());
    peaks.push_back({{"time", rec.times[static_cast<std::size_t>(it - y.begin())]}, {"population", *it}});
  }
  t.metadata()["results"] = {{"k1d_over_pi_d", k * d / kPi},
                             {"packet_delta", w_packet},
                             {"v_g", vg},
                             {"transit_time", spacing * d / vg},
                             {"qubit_peaks", peaks},
                             {"qubit_sites", {l.first, l.last}}};
  return {std::move(t), {}};
}

ScenarioOutput run_inverted(const json& cfg, const RunContext&, const char* tag) {
  const ChainGeometry chain = chain_from_config(cfg);
  const std::vector<ImpurityQubit> qs = qubits_from_config(cfg, chain.spacing());
  const EffectiveModel m = build_model(chain, qs);
  const State s0 = inverted_state(m, int_list(cfg, "/initial_state/qubits"));
  const TrajectoryRecord rec = propagate_no_jump(s0, m, output_grid(cfg, get_number(cfg, "/evolution/t_end")),
                                                 population_observer(chain_and_qubits(m)), propagation_from_config(cfg));
  ResultTable t = rec.to_table();
  json res = {{"qubit_detunings", json::array()}};
  for (const auto& q : qs) res["qubit_detunings"].push_back(q.detuning_q);
  res["band"] = {{"delta_min", band_edges(chain.spacing()).delta_min}, {"delta_max", band_edges(chain.spacing()).delta_max}};
  if (std::string(tag) == "bic") {
    const auto& q = rec.column("q0");
    res["revivals"] = static_cast<int>(local_maxima(q, 0.01).size());
    res["final"] = {{"qubit", q.back()}, {"chain", rec.column("chain").back()}, {"norm", rec.column("norm").back()}};
    res["assumptions"] = {"lattice constant defaults to 0.1 (not stated for this configuration)"};
  } else if (qs.size() >= 2) {
    const auto& q1 = rec.column("q1");
    res["q1_peak"] = *std::max_element(q1.begin(), q1.end());
    res["q1_maxima"] = static_cast<int>(local_maxima(q1, 0.1).size());
  }
  t.metadata()["results"] = res;
  return {std::move(t), {}};
}

ScenarioOutput run_chirality_map(const json& cfg, const RunContext& ctx) {
  const ChainGeometry chain = chain_from_config(cfg);
  const double d = chain.spacing();
  if (cfg.at("qubits").size() != 1) config_error("/qubits: chirality_map takes one qubit");
  const ImpurityQubit base = qubit_from_config(cfg["qubits"][0], d, "/qubits/0");
  const std::vector<double> phis = linspace(get_number(cfg, "/params/phi_min"), get_number(cfg, "/params/phi_max"),
                                            get_int(cfg, "/params/n_phi"));
  const std::vector<double> zs = linspace(get_number(cfg, "/params/z_min_over_d"), get_number(cfg, "/params/z_max_over_d"),
                                          get_int(cfg, "/params/n_z"));
  const int site = chain.n_atoms() / 2;
  const double t_end = get_number(cfg, "/evolution/t_end");
  const PropagationOptions opt = propagation_from_config(cfg);
  const std::size_t npts = phis.size() * zs.size();
  std::vector<std::array<double, 4>> vals(npts);
  RVector profile;
  parallel_for(static_cast<int>(npts), ctx.threads, [&](int i) {
    ImpurityQubit q = base;
    q.phi_q = phis[static_cast<std::size_t>(i) / zs.size()];
    q.z_q = (site + zs[static_cast<std::size_t>(i) % zs.size()]) * d;
    const EffectiveModel m = build_model(chain, {q});
    State s = excite_site(m.size(), m.qubit_index(0));
    Propagator p(m, opt);
    p.advance(s, t_end);
    const RVector pop = s.site_populations();
    double left = 0.0, right = 0.0;
    for (int j = 0; j < m.n_chain(); ++j) (j * d < q.z_q ? left : right) += pop(j);
    const std::optional<double> c = chirality(s, m, 0);
    const GuidedRate g = gamma_guided(q, d, q.detuning_q);
    const double ca = g.total > 0.0 ? (g.left - g.right) / (g.left + g.right) : kNaN;
    vals[static_cast<std::size_t>(i)] = {c ? *c : kNaN, ca, left, right};
    if (i == 0) profile = pop.head(m.n_chain());
  });
  ResultTable t;
  t.set_columns({"phi", "z_over_d", "chirality", "chirality_analytic", "p_left", "p_right"});
  for (std::size_t i = 0; i < npts; ++i) {
    const auto& v = vals[i];
    t.add_row({phis[i / zs.size()], zs[i % zs.size()], v[0], v[1], v[2], v[3]});
  }
  t.metadata()["results"] = {{"qubit_site", site}, {"convention", "positive chirality = emission towards -z"}};
  ScenarioOutput out{std::move(t), {}};
  if (get_bool(cfg, "/params/profile")) {
    ResultTable pt;
    std::vector<double> z, p;
    for (int j = 0; j < chain.n_atoms(); ++j) {
      z.push_back(j - site - zs[0]);
      p.push_back(profile(j));
    }
    pt.add_column("z_minus_zq_over_d", z);
    pt.add_column("population", p);
    pt.metadata()["results"] = {{"phi", phis[0]}, {"z_over_d", zs[0]}, {"t", t_end}};
    out.extra.emplace_back("profile", std::move(pt));
  }
  return out;
}

struct CollisionResult {
  TrajectoryRecord record;
  double gamma = 0.0;
  double t_c = 0.0;
  double v_g = 0.0;
};

CollisionResult collide(const ChainGeometry& chain, double k, double zeta, int separation, int n_out,
                        const PropagationOptions& opt) {
  const double d = chain.spacing();
  const double mid = chain.center_z();
  const double half = 0.5 * separation * d;
  const PreparedState init = init_two_photon(chain, k, zeta, {mid - half, mid + half});
  const EffectiveModel m = build_model(chain, {});
  CollisionResult r;
  r.v_g = group_velocity(k, d);
  r.t_c = half / r.v_g;
  const double t_f = 2.0 * r.t_c;
  std::vector<double> grid;
  for (int i = 0; i <= n_out; ++i) grid.push_back(t_f * i / n_out);
  Observer obs = population_observer({});
  r.record = propagate_no_jump(init.state, m, grid, obs, opt);
  const auto& p2 = r.record.column("two_exc");
  r.gamma = 1.0 - p2.back() / p2.front();
  return r;
}

ScenarioOutput run_collision(const json& cfg, const RunContext&) {
  const ChainGeometry chain = chain_from_config(cfg);
  const double d = chain.spacing();
  const double k = guided_k(cfg, "/initial_state/k1d", d);
  const CollisionResult r = collide(chain, k, get_number(cfg, "/initial_state/zeta") * d,
                                    get_int(cfg, "/initial_state/separation_sites"), get_int(cfg, "/params/n_out"),
                                    propagation_from_config(cfg));
  ResultTable t = r.record.to_table();
  t.metadata()["results"] = {{"gamma", r.gamma}, {"t_c", r.t_c}, {"t_f", 2.0 * r.t_c}, {"v_g", r.v_g}};
  return {std::move(t), {}};
}

ScenarioOutput run_collision_sweep(const json& cfg, const RunContext& ctx) {
  const int n = get_int(cfg, "/chain/n_atoms");
  const std::vector<double> ks = get_numbers(cfg, "/params/k1d_values");
  const std::vector<double> ds = get_numbers(cfg, "/params/d_values");
  const double zeta_sites = get_number(cfg, "/initial_state/zeta");
  const int sep = get_int(cfg, "/initial_state/separation_sites");
  const PropagationOptions opt = propagation_from_config(cfg);
  const std::size_t npts = ks.size() * ds.size();
  std::vector<double> gam(npts, kNaN), tf(npts, kNaN);
  parallel_for(static_cast<int>(npts), ctx.threads, [&](int i) {
    const double kk = ks[static_cast<std::size_t>(i) / ds.size()];
    const double d = ds[static_cast<std::size_t>(i) % ds.size()];
    validate_spacing(d);
    if (!(kk * kPi / d > kK0 * (1.0 + 1e-9))) return;  // not guided at this spacing
    const CollisionResult r = collide(ChainGeometry(n, d), kk * kPi / d, zeta_sites * d, sep, 20, opt);
    gam[static_cast<std::size_t>(i)] = r.gamma;
    tf[static_cast<std::size_t>(i)] = 2.0 * r.t_c;
    log(ctx, "collision point " + std::to_string(i + 1) + "/" + std::to_string(npts));
  });
  ResultTable t;
  t.set_columns({"k1d", "d", "gamma", "t_f"});
  json fits = json::array();
  for (std::size_t a = 0; a < ks.size(); ++a) {
    std::vector<double> x, y;
    for (std::size_t b = 0; b < ds.size(); ++b) {
      const std::size_t i = a * ds.size() + b;
      t.add_row({ks[a], ds[b], gam[i], tf[i]});
      if (gam[i] > 0.0) {
        x.push_back(ds[b]);
        y.push_back(gam[i]);
      }
    }
    json f = {{"k1d", ks[a]}, {"points", x.size()}};
    if (x.size() >= 4) {
      const PowerLawFit p = fit_power_law(x, y);
      f["prefactor"] = p.prefactor;
      f["exponent"] = p.exponent;
      f["exponent_stderr"] = p.exponent_stderr;
    }
    fits.push_back(f);
  }
  t.metadata()["results"] = {{"power_law", fits}, {"skipped", "points with k1d at or inside the light line"}};
  return {std::move(t), {}};
}

ScenarioOutput run_multiphoton(const json& cfg, const RunContext& ctx) {
  const ChainGeometry chain = chain_from_config(cfg);
  const std::vector<ImpurityQubit> qs = qubits_from_config(cfg, chain.spacing());
  if (qs.size() != 2) config_error("/qubits: two_qubit_multiphoton takes two qubits");
  const EffectiveModel m = build_model(chain, qs);
  const std::vector<double> grid = output_grid(cfg, get_number(cfg, "/evolution/t_end"));
  const Observer obs = population_observer(chain_and_qubits(m));
  const bool no_jump = get_bool(cfg, "/evolution/condition_on_no_jump");
  const int ntraj = get_int(cfg, "/evolution/n_trajectories");
  TrajectoryOptions topt;
  topt.propagation = propagation_from_config(cfg);

  ResultTable t;
  t.add_column("t", grid);
  json res = json::object();
  const std::pair<const char*, State> cases[] = {{"one", excite_site(m.size(), m.qubit_index(0))},
                                                 {"both", excite_pair(m.size(), m.qubit_index(0), m.qubit_index(1))}};
  for (const auto& [tag, s0] : cases) {
    const std::string sfx = std::string("_") + tag;
    if (no_jump || ntraj == 0) {
      const TrajectoryRecord r = propagate_no_jump(s0, m, grid, obs, topt.propagation);
      for (const char* c : {"q0", "q1", "chain", "norm"}) t.add_column(c + sfx, r.column(c));
    } else {
      const auto seed = cfg["evolution"]["seed"].get<std::uint64_t>();
      const EnsembleResult e = run_ensemble(s0, m, grid, seed, ntraj, obs, ctx.threads, topt);
      for (std::size_t k = 0; k < e.names.size(); ++k) {
        const std::string& c = e.names[k];
        if (c != "q0" && c != "q1" && c != "chain" && c != "two_exc") continue;
        t.add_column(c + sfx, e.mean[k]);
        t.add_column(c + sfx + "_stderr", e.std_error[k]);
      }
      res[tag] = {{"n_trajectories", e.n_trajectories}, {"n_jumps", e.n_jumps}};
    }
    log(ctx, std::string("multiphoton case '") + tag + "' done");
  }
  res["conditioned_on_no_jump"] = no_jump || ntraj == 0;
  t.metadata()["results"] = res;
  return {std::move(t), {}};
}

json qubit(double rho, double z, double gamma0, json extra = json::object()) {
  json q = {{"rho_over_d", rho}, {"z_over_d", z}, {"gamma0", gamma0}};
  for (const auto& [k, v] : extra.items()) q[k] = v;
  return q;
}

json chain(int n, double d) { return {{"n_atoms", n}, {"d", d}, {"polarization", "z"}}; }

json evolution(double t_end, double dt_out, const char* method) {
  return {{"t_end", t_end},      {"dt_out", dt_out},         {"method", method},
          {"condition_on_no_jump", true}, {"n_trajectories", 0}, {"seed", nullptr}};
}

}  // namespace

void register_dynamics_scenarios(std::vector<ScenarioInfo>& out) {
  out.push_back({"transmission",
                 "spin-wave packet scattered by one or more qubits: T, R, loss vs detuning",
                 {{"scenario", "transmission"},
                  {"chain", chain(4000, 0.1)},
                  {"qubits", {qubit(1.0, 0.0, 0.02, {{"resonant_k1d", 0.7}, {"compensate_shift", true}})}},
                  {"initial_state", {{"type", "spin_wave"}, {"k1d", 0.7}, {"zeta", 300.0}}},
                  {"evolution", {{"method", "krylov"}}},
                  {"params",
                   {{"n_qubits", 1},
                    {"qubit_spacing_sites", 20},
                    {"packet_distance_sites", 1000},
                    {"clearance_zeta", 3.0},
                    {"delta_min", -3.0},
                    {"delta_max", 3.0},
                    {"n_delta", 13}}}},
                 run_transmission});
  out.push_back({"bandgap_rabi",
                 "two qubits tuned into the bandgap exchanging an excitation through a bound state",
                 {{"scenario", "bandgap_rabi"},
                  {"chain", chain(199, 0.05)},
                  {"qubits",
                   {qubit(0.4, 95.5, 0.001, {{"above_band_edge", 4.5}}),
                    qubit(0.4, 103.5, 0.001, {{"above_band_edge", 4.5}})}},
                  {"initial_state", {{"type", "invert_qubits"}, {"qubits", {0}}}},
                  {"evolution", evolution(30000.0, 10.0, "eigen")}},
                 [](const json& c, const RunContext& x) { return run_inverted(c, x, "rabi"); }});
  out.push_back({"time_delay",
                 "retarded excitation of distant qubits by a detuned packet",
                 {{"scenario", "time_delay"},
                  {"chain", chain(4000, 0.1)},
                  {"qubits", {qubit(1.0, 0.0, 0.02, {{"resonant_k1d", 0.95}, {"compensate_shift", true}})}},
                  {"initial_state", {{"type", "spin_wave"}, {"zeta", 300.0}, {"detuning_below", 14.5}}},
                  {"evolution", evolution(0.0, 1.0, "krylov")},
                  {"params", {{"n_qubits", 2}, {"qubit_spacing_sites", 800}, {"packet_distance_sites", 1000}}}},
                 run_time_delay});
  out.push_back({"bic",
                 "strongly coupled qubit above the band: revivals and fractional decay",
                 {{"scenario", "bic"},
                  {"chain", chain(400, 0.1)},
                  {"qubits", {qubit(0.5, 200.0, 1.0, {{"detuning", 8.5}})}},
                  {"initial_state", {{"type", "invert_qubits"}, {"qubits", {0}}}},
                  {"evolution", evolution(30.0, 0.02, "krylov")}},
                 [](const json& c, const RunContext& x) { return run_inverted(c, x, "bic"); }});
  out.push_back({"chirality_map",
                 "directional emission of a circularly polarized qubit over azimuth and z",
                 {{"scenario", "chirality_map"},
                  {"chain", chain(500, 0.1)},
                  {"qubits", {qubit(0.4, 0.5, 0.002, {{"dipole", "chiral"}, {"resonant_k1d", 0.7}})}},
                  {"evolution", {{"t_end", 2.0}, {"method", "krylov"}}},
                  {"params",
                   {{"phi_min", -kPi},
                    {"phi_max", kPi},
                    {"n_phi", 9},
                    {"z_min_over_d", 0.0},
                    {"z_max_over_d", 1.0},
                    {"n_z", 5},
                    {"profile", false}}}},
                 run_chirality_map});
  out.push_back({"collision",
                 "two counter-propagating spin waves colliding; two-excitation population loss",
                 {{"scenario", "collision"},
                  {"chain", chain(200, 0.1)},
                  {"initial_state", {{"type", "two_photon"}, {"k1d", 0.7}, {"zeta", 15.0}, {"separation_sites", 60}}},
                  {"evolution", {{"method", "krylov"}}},
                  {"params", {{"n_out", 100}}}},
                 run_collision});
  out.push_back({"collision_sweep",
                 "collision loss over spacing and wave-vector with power-law fits",
                 {{"scenario", "collision_sweep"},
                  {"chain", {{"n_atoms", 120}}},
                  {"initial_state", {{"type", "two_photon"}, {"zeta", 15.0}, {"separation_sites", 60}}},
                  {"evolution", {{"method", "krylov"}}},
                  {"params", {{"k1d_values", {0.6, 0.7, 0.8, 0.9}}, {"d_values", {0.1, 0.15, 0.2, 0.25, 0.3}}}}},
                 run_collision_sweep});
  json mp_evo = evolution(60.0, 0.5, "krylov");
  mp_evo["condition_on_no_jump"] = false;
  mp_evo["n_trajectories"] = 100;
  mp_evo["seed"] = 7;
  out.push_back({"two_qubit_multiphoton",
                 "two end qubits, one versus both inverted, averaged over trajectories",
                 {{"scenario", "two_qubit_multiphoton"},
                  {"chain", chain(120, 0.1)},
                  {"qubits",
                   {qubit(0.4, 0.0, 0.002, {{"resonant_k1d", 0.7}}), qubit(0.4, 119.0, 0.002, {{"resonant_k1d", 0.7}})}},
                  {"evolution", mp_evo}},
                 run_multiphoton});
}

}  // namespace awg::detail
