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

#include "atomwg/trajectory.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace awg {

namespace {

State normalized(const State& s) {
  State out = s;
  const double n = s.norm_sq();
  if (n > 0.0) out.amplitudes /= std::sqrt(n);
  return out;
}

// Applies a randomly selected collective jump; returns the channel.
int apply_jump(State& s, const EffectiveModel& model, SplitMix64& rng) {
  const JumpBasis& jb = model.jump_basis();
  const auto m = static_cast<Eigen::Index>(model.size());
  RVector weight(m);
  CMatrix targets;
  CVector scalars;
  if (s.manifold == 1) {
    scalars = jb.vectors.adjoint() * s.amplitudes;
    for (Eigen::Index nu = 0; nu < m; ++nu) weight(nu) = jb.rates(nu) * std::norm(scalars(nu));
  } else {
    targets = pair_matrix(s) * jb.vectors.conjugate();
    for (Eigen::Index nu = 0; nu < m; ++nu) weight(nu) = jb.rates(nu) * targets.col(nu).squaredNorm();
  }
  const double total = weight.sum();
  if (!(total > 0.0)) throw Error(ErrorCategory::numerical, "jump requested from a dark state");
  const double r = rng.uniform() * total;
  double acc = 0.0;
  Eigen::Index nu = 0;
  for (; nu < m - 1; ++nu) {
    acc += weight(nu);
    if (r < acc) break;
  }
  // skip channels that cannot fire (rounding at the top end)
  while (weight(nu) == 0.0 && nu > 0) --nu;
  if (s.manifold == 1) {
    s = ground_state(s.n_emitters);
  } else {
    const CVector c = targets.col(nu);
    s = single_excitation(c / c.norm());
  }
  return static_cast<int>(nu);
}

}  // namespace

TrajectoryRecord sample_trajectory(const State& initial, const EffectiveModel& model,
                                   const std::vector<double>& t_grid, std::uint64_t seed,
                                   const Observer& observer, const TrajectoryOptions& options) {
  if (!options.jumps) {
    TrajectoryRecord rec = propagate_no_jump(initial, model, t_grid, observer, options.propagation);
    rec.seed = seed;
    return rec;
  }
  if (t_grid.empty()) throw Error(ErrorCategory::domain, "empty time grid");
  if (initial.manifold > 0 && initial.n_emitters != model.size()) {
    throw Error(ErrorCategory::domain, "state size does not match the model");
  }
  Propagator prop(model, options.propagation);
  SplitMix64 rng(seed);
  TrajectoryRecord rec;
  rec.seed = seed;
  rec.times = t_grid;
  rec.names = observer.names;
  rec.columns.assign(observer.names.size(), std::vector<double>(t_grid.size()));
  std::vector<double> buf(observer.names.size());

  State s = normalized(initial);
  double u = rng.uniform();
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    if (k > 0) {
      double t = t_grid[k - 1];
      const double target = t_grid[k];
      while (t < target && s.manifold > 0) {
        const double elapsed = prop.advance_until_norm(s, target - t, u);
        t += elapsed;
        if (s.norm_sq() <= u) {
          JumpEvent ev;
          ev.time = t;
          ev.manifold_before = s.manifold;
          ev.channel = apply_jump(s, model, rng);
          ev.manifold_after = s.manifold;
          rec.jumps.push_back(ev);
          u = rng.uniform();
        } else {
          t = target;
        }
      }
    }
    observer.eval(normalized(s), buf.data());
    for (std::size_t c = 0; c < buf.size(); ++c) rec.columns[c][k] = buf[c];
  }
  return rec;
}

ResultTable EnsembleResult::to_table() const {
  ResultTable t;
  t.add_column("t", times);
  for (std::size_t k = 0; k < names.size(); ++k) {
    t.add_column(names[k], mean[k]);
    t.add_column(names[k] + "_stderr", std_error[k]);
  }
  t.metadata()["n_trajectories"] = n_trajectories;
  t.metadata()["n_jumps"] = n_jumps;
  t.metadata()["seed"] = seed;
  return t;
}

EnsembleResult run_ensemble(const State& initial, const EffectiveModel& model,
                            const std::vector<double>& t_grid, std::uint64_t seed, int n,
                            const Observer& observer, int threads, const TrajectoryOptions& options) {
  if (n < 1) throw Error(ErrorCategory::domain, "ensemble needs at least one trajectory");
  if (options.jumps) model.jump_basis();  // build once, before workers start

  const std::size_t nt = t_grid.size();
  const std::size_t nc = observer.names.size();
  constexpr int kChunk = 32;
  const int n_chunks = (n + kChunk - 1) / kChunk;
  struct Partial {
    std::vector<double> sum, sumsq;
    long jumps = 0;
  };
  std::vector<Partial> parts(static_cast<std::size_t>(n_chunks));
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(1, threads)));

  auto worker = [&](int w) {
    try {
      for (int c = next++; c < n_chunks; c = next++) {
        Partial& p = parts[static_cast<std::size_t>(c)];
        p.sum.assign(nt * nc, 0.0);
        p.sumsq.assign(nt * nc, 0.0);
        const int end = std::min(n, (c + 1) * kChunk);
        for (int i = c * kChunk; i < end; ++i) {
          const TrajectoryRecord r =
              sample_trajectory(initial, model, t_grid, seed ^ static_cast<std::uint64_t>(i), observer, options);
          p.jumps += static_cast<long>(r.jumps.size());
          for (std::size_t col = 0; col < nc; ++col) {
            for (std::size_t t = 0; t < nt; ++t) {
              const double x = r.columns[col][t];
              p.sum[col * nt + t] += x;
              p.sumsq[col * nt + t] += x * x;
            }
          }
        }
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
      next = n_chunks;
    }
  };
  threads = std::max(1, std::min(threads, n_chunks));
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // pairwise reduction in chunk order
  for (std::size_t stride = 1; stride < parts.size(); stride *= 2) {
    for (std::size_t i = 0; i + stride < parts.size(); i += 2 * stride) {
      Partial& a = parts[i];
      const Partial& b = parts[i + stride];
      for (std::size_t k = 0; k < a.sum.size(); ++k) {
        a.sum[k] += b.sum[k];
        a.sumsq[k] += b.sumsq[k];
      }
      a.jumps += b.jumps;
    }
  }
  EnsembleResult out;
  out.times = t_grid;
  out.names = observer.names;
  out.n_trajectories = n;
  out.n_jumps = parts[0].jumps;
  out.seed = seed;
  out.mean.assign(nc, std::vector<double>(nt));
  out.std_error.assign(nc, std::vector<double>(nt));
  for (std::size_t col = 0; col < nc; ++col) {
    for (std::size_t t = 0; t < nt; ++t) {
      const double s = parts[0].sum[col * nt + t];
      const double s2 = parts[0].sumsq[col * nt + t];
      const double mean = s / n;
      const double var = n > 1 ? std::max(0.0, (s2 - n * mean * mean) / (n - 1)) : 0.0;
      out.mean[col][t] = mean;
      out.std_error[col][t] = std::sqrt(var / n);
    }
  }
  return out;
}

}  // namespace awg
