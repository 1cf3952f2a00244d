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

#include "atomwg/guided.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "atomwg/dispersion.hpp"
#include "atomwg/quadrature.hpp"
#include "atomwg/specfun.hpp"

namespace awg {

namespace {

constexpr int kMaxShells = 200;
constexpr double kShellTol = 1e-10;

struct ModePair {
  ModeSample u;
  ModeSample v;
};

ModePair mode_both(double k_z, const CylPosition& pos, double d, int n_umklapp) {
  validate_spacing(d);
  if (!(pos.rho > 0.0)) {
    throw Error(ErrorCategory::singularity, "mode functions diverge on the chain axis (rho = 0)");
  }
  if (n_umklapp < 1) throw Error(ErrorCategory::domain, "n_umklapp must be >= 1");
  const double k = kK0;
  const double k2 = k * k;
  const double g0 = 2.0 * kPi / d;
  cplx ur = 0.0, uz = 0.0, vr = 0.0, vz = 0.0;
  auto add = [&](int n, cplx& dur, cplx& duz, cplx& dvr, cplx& dvz) {
    const double q = k_z + n * g0;
    const cplx kp = transverse_wavenumber(k, q);
    const cplx arg = kp * pos.rho;
    const cplx h0 = hankel1(0, arg);
    const cplx h1 = hankel1(1, arg);
    const cplx ph = std::exp(kI * (q * pos.z));
    const cplx phc = std::conj(ph);
    const cplx radial = q * kp / k2 * h1;
    const double axial = 1.0 - q * q / k2;
    dur += -kI * radial * ph;
    duz += axial * ph * h0;
    dvr += kI * radial * phc;
    dvz += axial * phc * h0;
  };
  add(0, ur, uz, vr, vz);
  int shells = 0;
  int quiet = 0;
  bool converged = false;
  for (int s = 1; s <= kMaxShells; ++s) {
    cplx dur = 0.0, duz = 0.0, dvr = 0.0, dvz = 0.0;
    add(s, dur, duz, dvr, dvz);
    add(-s, dur, duz, dvr, dvz);
    ur += dur;
    uz += duz;
    vr += dvr;
    vz += dvz;
    shells = s;
    const double change = std::sqrt(std::norm(dur) + std::norm(duz) + std::norm(dvr) + std::norm(dvz));
    const double size = std::sqrt(std::norm(ur) + std::norm(uz) + std::norm(vr) + std::norm(vz));
    if (change <= kShellTol * size || change < 1e-300) {
      ++quiet;
    } else {
      quiet = 0;
    }
    if (s >= n_umklapp && quiet >= 2) {
      converged = true;
      break;
    }
  }
  ModePair out;
  out.u = ModeSample{ur, 0.0, uz, k_z, pos, shells, converged};
  out.v = ModeSample{vr, 0.0, vz, k_z, pos, shells, converged};
  return out;
}

cplx gauss_legendre8(const std::function<cplx(double)>& f, double a, double b) {
  static constexpr double x[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                  0.9602898564975363};
  static constexpr double w[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                  0.1012285362903763};
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  cplx s = 0.0;
  for (int i = 0; i < 4; ++i) s += w[i] * (f(c - h * x[i]) + f(c + h * x[i]));
  return h * s;
}

double pole_prefactor(double d, double v_g) {
  const double k = kK0;
  return 9.0 * kPi * kPi / (16.0 * k * k * d * v_g);
}

// Integrand d^* . u (x) v . d / (delta - omega(k_z)).
cplx chain_integrand(double k_z, const ImpurityQubit& q, double d, double delta) {
  const ModePair m = mode_both(k_z, q.cylindrical(), d, 1);
  const cplx num = project_conj(q.dipole, m.u) * project_plain(m.v, q.dipole);
  return num / (delta - omega_of_kz(k_z, d));
}

}  // namespace

CVec3 ModeSample::cartesian() const {
  const double c = std::cos(position.phi);
  const double s = std::sin(position.phi);
  return CVec3(rho * c - phi * s, rho * s + phi * c, z);
}

ModeSample mode_u(double k_z, const CylPosition& pos, double d, int n_umklapp) {
  return mode_both(k_z, pos, d, n_umklapp).u;
}

ModeSample mode_v(double k_z, const CylPosition& pos, double d, int n_umklapp) {
  return mode_both(k_z, pos, d, n_umklapp).v;
}

cplx project_conj(const CVec3& dipole, const ModeSample& m) {
  return dipole.dot(m.cartesian());
}

cplx project_plain(const ModeSample& m, const CVec3& dipole) {
  return (m.cartesian().transpose() * dipole)(0);
}

double delta_for_k1d(double k1d, double d) { return omega_of_kz(k1d, d).real(); }

GuidedRate gamma_guided(const ImpurityQubit& qubit, double d, double delta) {
  qubit.validate();
  GuidedRate out;
  K1dRoot root;
  try {
    root = find_k1d(delta, d);
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::out_of_band) throw;
    out.bandgap = true;
    return out;
  }
  out.k1d = root.k1d;
  out.root_multiplicity = root.multiplicity;
  out.v_g = group_velocity(root.k1d, d);
  if (!(out.v_g > 0.0)) {
    throw Error(ErrorCategory::numerical, "non-positive group velocity at the guided pole");
  }
  const double pref = pole_prefactor(d, out.v_g);
  const ModeSample up = mode_u(root.k1d, qubit.cylindrical(), d);
  const ModeSample um = mode_u(-root.k1d, qubit.cylindrical(), d);
  out.right = pref * std::norm(project_conj(qubit.dipole, up));
  out.left = pref * std::norm(project_conj(qubit.dipole, um));
  out.total = out.left + out.right;
  return out;
}

FreeSpaceRate gamma_free_space_detail(const ImpurityQubit& qubit, double d, double delta) {
  qubit.validate();
  validate_spacing(d);
  const double k = kK0;
  auto f = [&](double theta) {
    const double kz = k * std::sin(theta);
    return chain_integrand(kz, qubit, d, delta) * (k * std::cos(theta));
  };
  auto run = [&](double tol) {
    return integrate_adaptive(f, -0.5 * kPi, 0.5 * kPi, tol, 0.0, 6000);
  };
  const double pref = 9.0 * kPi / (16.0 * k * k * d);
  const double tol = 1e-9 / pref;
  QuadratureResult r1 = run(tol);
  QuadratureResult r2 = run(0.5 * tol);
  const double v1 = r1.value.imag() * pref;
  const double v2 = r2.value.imag() * pref;
  if (!r2.converged || std::abs(v1 - v2) > 1e-8) {
    throw Error(ErrorCategory::numerical,
                "free-space rate quadrature failed to converge (estimate " +
                    std::to_string(r2.error_estimate * pref) + ", tolerance halving change " +
                    std::to_string(std::abs(v1 - v2)) + ")");
  }
  return {1.0 + v2, r2.error_estimate * pref, r1.evaluations + r2.evaluations};
}

double gamma_free_space(const ImpurityQubit& qubit, double d, double delta) {
  return gamma_free_space_detail(qubit, d, delta).rate;
}

double coherent_shift(const ImpurityQubit& qubit, double d, double delta) {
  qubit.validate();
  validate_spacing(d);
  const double k = kK0;
  const double zone = kPi / d;
  auto radiative = [&](double theta) {
    const double kz = k * std::sin(theta);
    return chain_integrand(kz, qubit, d, delta) * (k * std::cos(theta));
  };
  double k1d = -1.0;
  try {
    k1d = find_k1d(delta, d).k1d;
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::out_of_band) throw;
  }
  const double abs_tol = 1e-10;
  const double rel_tol = 1e-10;
  auto integrate = [&](const std::function<cplx(double)>& f, double a, double b) {
    const QuadratureResult r = integrate_adaptive(f, a, b, abs_tol, rel_tol, 8000);
    if (!r.converged) {
      throw Error(ErrorCategory::numerical, "coherent shift quadrature did not converge (error estimate " +
                                                std::to_string(r.error_estimate) + ")");
    }
    return r.value;
  };
  // Hankel functions are log-singular at the light line; x = a + (b-a) t^2
  // flattens the endpoint at a.
  auto flattened = [&](const std::function<cplx(double)>& h, double a, double b) {
    const double w = b - a;
    return integrate([&](double t) { return h(a + w * t * t) * (2.0 * w * t); }, 0.0, 1.0);
  };
  cplx total = integrate(radiative, -0.5 * kPi, 0.5 * kPi);
  for (double sign : {1.0, -1.0}) {
    std::function<cplx(double)> h = [&](double x) { return chain_integrand(sign * x, qubit, d, delta); };
    if (k1d < 0.0) {
      total += flattened(h, k, zone);
      continue;
    }
    // Principal value: fold [k1d - a, k1d + a] onto itself so the simple pole
    // cancels, then integrate whatever is left on the longer side.
    const double below = k1d - k;
    const double above = zone - k1d;
    const double a = std::min(below, above);
    if (a > 0.0) {
      std::function<cplx(double)> folded = [&](double s) { return h(k1d + s) + h(k1d - s); };
      // The residual 1/s^2 noise from rounding k1d defeats adaptive refinement
      // at tiny s; the folded integrand is smooth, so a fixed Gauss rule
      // covers [0, eta].
      const double eta = std::min(1e-3 * zone, 0.25 * a);
      total += gauss_legendre8(folded, 0.0, eta);
      total += a == below ? flattened([&](double u) { return folded(a - u); }, 0.0, a - eta)
                          : integrate(folded, eta, a);
    }
    if (below > above) {
      total += flattened(h, k, k1d - a);
    } else if (above > below) {
      total += integrate(h, k1d + a, zone);
    }
  }
  return -(9.0 * kPi / (32.0 * k * k * d)) * total.real();
}

CouplingRates coupling_rates(const ImpurityQubit& qubit, double d, double delta, bool with_shift) {
  CouplingRates r;
  const GuidedRate g = gamma_guided(qubit, d, delta);
  r.gamma_1d = g.total;
  r.gamma_left = g.left;
  r.gamma_right = g.right;
  r.gamma_free = gamma_free_space(qubit, d, delta);
  r.optical_depth = r.gamma_1d / r.gamma_free;
  if (with_shift) {
    r.shift = coherent_shift(qubit, d, delta);
    r.has_shift = true;
  }
  return r;
}

ResultTable scan_decay_rates(double d, double delta, const std::vector<double>& rho_grid,
                             const std::vector<double>& z_grid, const CVec3& dipole, int threads) {
  validate_spacing(d);
  for (double rho : rho_grid) {
    if (!(rho > 0.0 && rho <= 3.0 * d * (1.0 + 1e-12))) {
      throw Error(ErrorCategory::domain, "scan radii must lie in (0, 3d]");
    }
  }
  const std::size_t n = rho_grid.size() * z_grid.size();
  std::vector<CouplingRates> rates(n);
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < n; i += step) {
      ImpurityQubit q;
      q.rho_q = rho_grid[i / z_grid.size()];
      q.z_q = z_grid[i % z_grid.size()];
      q.dipole = dipole;
      rates[i] = coupling_rates(q, d, delta);
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  ResultTable table;
  table.set_columns({"rho_q", "z_q", "gamma_free", "gamma_1d", "optical_depth"});
  for (std::size_t i = 0; i < n; ++i) {
    table.add_row({rho_grid[i / z_grid.size()], z_grid[i % z_grid.size()], rates[i].gamma_free,
                   rates[i].gamma_1d, rates[i].optical_depth});
  }
  return table;
}

MagicPoint find_magic_point(double d, double delta, const CVec3& dipole) {
  auto gfree = [&](double rho, double z) {
    ImpurityQubit q;
    q.rho_q = rho;
    q.z_q = z;
    q.dipole = dipole;
    return gamma_free_space(q, d, delta);
  };
  const int nr = 14;
  const int nz = 8;
  const double rlo = 0.2 * d, rhi = 1.5 * d;
  double best = 1e300, br = rlo, bz = 0.0;
  for (int i = 0; i < nr; ++i) {
    const double rho = rlo + (rhi - rlo) * i / (nr - 1);
    for (int j = 0; j < nz; ++j) {
      const double z = -0.5 * d + d * (j + 1) / nz;
      const double g = gfree(rho, z);
      if (g < best) {
        best = g;
        br = rho;
        bz = z;
      }
    }
  }
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  auto minimize = [&](auto&& f, double a, double b, double tol) {
    double c = b - golden * (b - a), e = a + golden * (b - a);
    double fc = f(c), fe = f(e);
    while (b - a > tol) {
      if (fc < fe) {
        b = e; e = c; fe = fc; c = b - golden * (b - a); fc = f(c);
      } else {
        a = c; c = e; fc = fe; e = a + golden * (b - a); fe = f(e);
      }
    }
    return fc < fe ? std::pair{c, fc} : std::pair{e, fe};
  };
  const double dr = (rhi - rlo) / (nr - 1);
  const double dz = d / nz;
  for (int sweep = 0; sweep < 2; ++sweep) {
    auto [r1, g1] = minimize([&](double r) { return gfree(r, bz); }, std::max(0.05 * d, br - dr),
                             br + dr, 1e-4 * d);
    if (g1 < best) { best = g1; br = r1; }
    auto [z1, g2] = minimize([&](double z) { return gfree(br, z); }, bz - dz, bz + dz, 1e-4 * d);
    if (g2 < best) { best = g2; bz = z1; }
  }
  // fold into [-d/2, d/2]
  bz = bz - d * std::round(bz / d);
  ImpurityQubit q;
  q.rho_q = br;
  q.z_q = bz;
  q.dipole = dipole;
  const GuidedRate g = gamma_guided(q, d, delta);
  return {br, bz, best, g.total / best};
}

}  // namespace awg
