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

#include "atomwg/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace awg {

namespace {

constexpr double kNormGrowthLimit = 1e-6;
constexpr double kBisectTol = 1e-9;

double manifold_norm_bound(const EffectiveModel& model, int manifold) {
  return std::max(1e-12, manifold * model.norm_bound());
}

void check_norm(double before, double after, double t) {
  if (after > before * (1.0 + kNormGrowthLimit) + 1e-300) {
    std::ostringstream os;
    os << "norm increased from " << before << " to " << after << " over a step of " << t
       << "; reduce the time step or check that Gamma is positive semidefinite";
    throw Error(ErrorCategory::numerical, os.str());
  }
}

// y = -i H x in the given manifold
void apply_a(const EffectiveModel& model, int manifold, const CVector& x, CVector& y) {
  if (manifold == 1) {
    model.apply(x, y);
  } else {
    State s;
    s.manifold = 2;
    s.n_emitters = model.size();
    s.amplitudes = x;
    y = apply_hamiltonian_two_exc(s, model).amplitudes;
  }
  y *= -kI;
}

// Arnoldi basis of A = -iH around v plus the Expokit-style augmented matrix.
struct KrylovBasis {
  std::vector<CVector> v;
  CMatrix f;  // (m+2)x(m+2), or (k x k) after a happy breakdown
  double beta = 0.0;
  int m = 0;
  bool happy = false;

  void build(const EffectiveModel& model, int manifold, const CVector& x, int mmax) {
    beta = x.norm();
    v.clear();
    happy = false;
    if (beta == 0.0) {
      m = 0;
      happy = true;
      f = CMatrix::Zero(1, 1);
      return;
    }
    const double anorm = manifold_norm_bound(model, manifold);
    CMatrix h = CMatrix::Zero(mmax + 2, mmax + 2);
    v.push_back(x / beta);
    CVector w;
    int j = 0;
    for (; j < mmax; ++j) {
      apply_a(model, manifold, v[static_cast<std::size_t>(j)], w);
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i <= j; ++i) {
          const cplx c = v[static_cast<std::size_t>(i)].dot(w);
          h(i, j) += c;
          w -= c * v[static_cast<std::size_t>(i)];
        }
      }
      const double hn = w.norm();
      if (hn <= 1e-13 * anorm) {
        happy = true;
        m = j + 1;
        f = h.topLeftCorner(m, m);
        return;
      }
      h(j + 1, j) = hn;
      v.push_back(w / hn);
    }
    m = mmax;
    apply_a(model, manifold, v[static_cast<std::size_t>(m)], w);
    const double avnorm = w.norm();
    f = h.topLeftCorner(m + 2, m + 2);
    f(m + 1, m) = 1.0;
    avn = avnorm;
  }

  double avn = 0.0;

  // Coefficients of exp(tau A) x in the basis and a local error estimate.
  CVector coefficients(double tau, double* err) const {
    if (m == 0) {
      if (err) *err = 0.0;
      return CVector::Zero(0);
    }
    const CMatrix e = (tau * f).exp();
    if (happy) {
      if (err) *err = 0.0;
      return beta * e.col(0);
    }
    if (err) {
      const double phi1 = std::abs(beta * e(m, 0));
      const double phi2 = std::abs(beta * e(m + 1, 0) * avn);
      if (phi1 > 10.0 * phi2) {
        *err = phi2;
      } else if (phi1 > phi2) {
        *err = phi1 * phi2 / (phi1 - phi2);
      } else {
        *err = phi1;
      }
    }
    return beta * e.col(0).head(m + 1);
  }

  CVector assemble(const CVector& coef) const {
    CVector out = CVector::Zero(v.empty() ? 0 : v[0].size());
    for (Eigen::Index i = 0; i < coef.size(); ++i) out += coef(i) * v[static_cast<std::size_t>(i)];
    return out;
  }
};

void rk4_step(const EffectiveModel& model, int manifold, CVector& y, double h) {
  CVector k1, k2, k3, k4;
  apply_a(model, manifold, y, k1);
  apply_a(model, manifold, y + 0.5 * h * k1, k2);
  apply_a(model, manifold, y + 0.5 * h * k2, k3);
  apply_a(model, manifold, y + h * k3, k4);
  y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

PropagationMethod parse_method(const std::string& s) {
  if (s == "eigen") return PropagationMethod::eigen;
  if (s == "rk4") return PropagationMethod::rk4;
  if (s == "krylov") return PropagationMethod::krylov;
  throw Error(ErrorCategory::config, "unknown propagation method '" + s + "' (eigen, rk4, krylov)");
}

const char* to_string(PropagationMethod m) {
  switch (m) {
    case PropagationMethod::eigen: return "eigen";
    case PropagationMethod::rk4: return "rk4";
    case PropagationMethod::krylov: return "krylov";
  }
  return "?";
}

struct Propagator::Eigen1 {
  CMatrix vecs;
  CVector vals;
  Eigen::PartialPivLU<CMatrix> lu;
};

Propagator::Propagator(const EffectiveModel& model, PropagationOptions options)
    : model_(model), opt_(options) {
  if (opt_.krylov_dim < 2) throw Error(ErrorCategory::config, "krylov_dim must be at least 2");
  if (opt_.method == PropagationMethod::eigen) {
    if (model_.size() > 2500) {
      throw Error(ErrorCategory::size,
                  "eigen propagation is limited to 2500 emitters; use method krylov or rk4");
    }
    eig_ = std::make_unique<Eigen1>();
    Eigen::ComplexEigenSolver<CMatrix> es(model_.dense_hamiltonian());
    if (es.info() != Eigen::Success) {
      throw Error(ErrorCategory::numerical, "diagonalization of H_eff failed");
    }
    eig_->vecs = es.eigenvectors();
    eig_->vals = es.eigenvalues();
    eig_->lu.compute(eig_->vecs);
  }
}

Propagator::~Propagator() = default;

void Propagator::advance(State& s, double dt) {
  if (dt < 0.0) throw Error(ErrorCategory::domain, "negative propagation interval");
  if (dt == 0.0 || s.manifold == 0) return;
  const double before = s.norm_sq();
  switch (opt_.method) {
    case PropagationMethod::eigen: {
      if (s.manifold != 1) {
        throw Error(ErrorCategory::size, "eigen propagation supports the single-excitation manifold only");
      }
      CVector c = eig_->lu.solve(s.amplitudes);
      for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(-kI * eig_->vals(k) * dt);
      s.amplitudes = eig_->vecs * c;
      break;
    }
    case PropagationMethod::rk4: {
      const double hmax = opt_.rk4_dt > 0.0 ? opt_.rk4_dt : 0.01 / manifold_norm_bound(model_, s.manifold);
      const long n = std::max(1L, static_cast<long>(std::ceil(dt / hmax - 1e-9)));
      const double h = dt / n;
      for (long k = 0; k < n; ++k) {
        const double b = s.norm_sq();
        rk4_step(model_, s.manifold, s.amplitudes, h);
        check_norm(b, s.norm_sq(), h);
      }
      break;
    }
    case PropagationMethod::krylov: {
      double remaining = dt;
      double& tau_cur = krylov_tau_[s.manifold];
      if (tau_cur <= 0.0) tau_cur = 0.5 * opt_.krylov_dim / manifold_norm_bound(model_, s.manifold);
      KrylovBasis kb;
      while (remaining > 0.0) {
        kb.build(model_, s.manifold, s.amplitudes, opt_.krylov_dim);
        if (kb.beta == 0.0) return;
        double tau = std::min(tau_cur, remaining);
        const bool clipped = tau < tau_cur;
        CVector coef;
        double err = 0.0;
        for (int tries = 0;; ++tries) {
          coef = kb.coefficients(tau, &err);
          if (err <= opt_.krylov_tol * tau || kb.happy) break;
          if (tries > 60) throw Error(ErrorCategory::numerical, "Krylov step size underflow");
          tau *= std::clamp(0.9 * std::pow(opt_.krylov_tol * tau / err, 1.0 / kb.m), 0.1, 0.9);
        }
        const double b = s.norm_sq();
        s.amplitudes = kb.assemble(coef);
        check_norm(b, s.norm_sq(), tau);
        remaining -= tau;
        if (remaining < 1e-14 * dt) remaining = 0.0;
        double proposal = kb.happy ? 5.0 * tau
                                   : tau * std::clamp(0.9 * std::pow(opt_.krylov_tol * tau / std::max(err, 1e-300),
                                                                     1.0 / kb.m),
                                                      0.2, 5.0);
        tau_cur = clipped ? std::max(tau_cur, proposal) : proposal;
      }
      break;
    }
  }
  check_norm(before, s.norm_sq(), dt);
}

double Propagator::advance_until_norm(State& s, double dt, double threshold) {
  if (s.manifold == 0 || dt <= 0.0) {
    advance(s, dt);
    return dt;
  }
  if (s.norm_sq() <= threshold) return 0.0;
  if (opt_.method == PropagationMethod::krylov) {
    double remaining = dt;
    double elapsed = 0.0;
    double& tau_cur = krylov_tau_[s.manifold];
    if (tau_cur <= 0.0) tau_cur = 0.5 * opt_.krylov_dim / manifold_norm_bound(model_, s.manifold);
    KrylovBasis kb;
    while (remaining > 0.0) {
      kb.build(model_, s.manifold, s.amplitudes, opt_.krylov_dim);
      double tau = std::min(tau_cur, remaining);
      const bool clipped = tau < tau_cur;
      CVector coef;
      double err = 0.0;
      for (int tries = 0;; ++tries) {
        coef = kb.coefficients(tau, &err);
        if (err <= opt_.krylov_tol * tau || kb.happy) break;
        if (tries > 60) throw Error(ErrorCategory::numerical, "Krylov step size underflow");
        tau *= std::clamp(0.9 * std::pow(opt_.krylov_tol * tau / err, 1.0 / kb.m), 0.1, 0.9);
      }
      if (coef.squaredNorm() <= threshold) {
        // norm is monotone within the step; bisect on the small problem
        double lo = 0.0, hi = tau;
        while (hi - lo > kBisectTol) {
          const double mid = 0.5 * (lo + hi);
          if (kb.coefficients(mid, nullptr).squaredNorm() > threshold) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        s.amplitudes = kb.assemble(kb.coefficients(hi, nullptr));
        return elapsed + hi;
      }
      const double b = s.norm_sq();
      s.amplitudes = kb.assemble(coef);
      check_norm(b, s.norm_sq(), tau);
      remaining -= tau;
      elapsed += tau;
      if (remaining < 1e-14 * dt) remaining = 0.0;
      double proposal = kb.happy ? 5.0 * tau
                                 : tau * std::clamp(0.9 * std::pow(opt_.krylov_tol * tau / std::max(err, 1e-300),
                                                                   1.0 / kb.m),
                                                    0.2, 5.0);
      tau_cur = clipped ? std::max(tau_cur, proposal) : proposal;
    }
    return dt;
  }
  State trial = s;
  advance(trial, dt);
  if (trial.norm_sq() > threshold) {
    s = std::move(trial);
    return dt;
  }
  double lo = 0.0, hi = dt;
  while (hi - lo > kBisectTol) {
    const double mid = 0.5 * (lo + hi);
    State probe = s;
    advance(probe, mid);
    if (probe.norm_sq() > threshold) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  advance(s, hi);
  return hi;
}

const std::vector<double>& TrajectoryRecord::column(const std::string& name) const {
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == name) return columns[k];
  }
  throw Error(ErrorCategory::domain, "record has no column '" + name + "'");
}

ResultTable TrajectoryRecord::to_table() const {
  ResultTable t;
  t.add_column("t", times);
  for (std::size_t k = 0; k < names.size(); ++k) t.add_column(names[k], columns[k]);
  nlohmann::json jumps_json = nlohmann::json::array();
  for (const auto& j : jumps) {
    jumps_json.push_back({{"t", j.time}, {"channel", j.channel}, {"from", j.manifold_before},
                          {"to", j.manifold_after}});
  }
  t.metadata()["jumps"] = jumps_json;
  t.metadata()["seed"] = seed;
  return t;
}

std::vector<double> time_grid(double t_end, double dt, double t0) {
  if (!(dt > 0.0) || t_end < t0) throw Error(ErrorCategory::domain, "invalid time grid");
  const long n = static_cast<long>(std::floor((t_end - t0) / dt + 1e-9));
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n + 2));
  for (long k = 0; k <= n; ++k) g.push_back(t0 + k * dt);
  if (t_end - g.back() > 1e-9 * dt) g.push_back(t_end);
  return g;
}

TrajectoryRecord propagate_no_jump(const State& initial, const EffectiveModel& model,
                                   const std::vector<double>& t_grid, const Observer& observer,
                                   const PropagationOptions& options) {
  if (t_grid.empty()) throw Error(ErrorCategory::domain, "empty time grid");
  if (initial.manifold > 0 && initial.n_emitters != model.size()) {
    throw Error(ErrorCategory::domain, "state size does not match the model");
  }
  Propagator prop(model, options);
  TrajectoryRecord rec;
  rec.times = t_grid;
  rec.names = observer.names;
  rec.columns.assign(observer.names.size(), std::vector<double>(t_grid.size()));
  std::vector<double> buf(observer.names.size());
  State s = initial;
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    if (k > 0) prop.advance(s, t_grid[k] - t_grid[k - 1]);
    observer.eval(s, buf.data());
    for (std::size_t c = 0; c < buf.size(); ++c) rec.columns[c][k] = buf[c];
  }
  return rec;
}

}  // namespace awg
