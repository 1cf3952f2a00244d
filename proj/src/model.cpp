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

#include "atomwg/model.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include <Eigen/Eigenvalues>

#include "atomwg/greens.hpp"

namespace awg {

namespace {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// Below this length the Toeplitz block is applied directly.
constexpr int kFftThreshold = 96;

int fft_length(int n) {
  int l = 1;
  while (l < 2 * n) l <<= 1;
  return l;
}

}  // namespace

struct EffectiveModel::Impl {
  // chain Toeplitz block: first row h[0..N-1]
  std::vector<cplx> h;
  // circulant embedding
  int L = 0;
  std::vector<cplx> h_hat;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  // chain -> extra, extra -> chain, extra <-> extra
  CMatrix b;  // N x Q: H(chain i, extra q)
  CMatrix c;  // Q x N: H(extra q, chain i)
  CMatrix e;  // Q x Q

  std::once_flag dense_once;
  CMatrix dense;
  std::once_flag jump_once;
  JumpBasis jumps;
  std::exception_ptr jump_error;

  ~Impl() {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
  }

  void apply_chain(const cplx* x, cplx* y) const {
    const int n = static_cast<int>(h.size());
    if (n < kFftThreshold || !fwd) {
      for (int i = 0; i < n; ++i) {
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) acc += h[static_cast<std::size_t>(std::abs(i - j))] * x[j];
        y[i] = acc;
      }
      return;
    }
    std::vector<cplx> buf(static_cast<std::size_t>(L), cplx(0.0));
    std::copy(x, x + n, buf.begin());
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_execute_dft(fwd, p, p);
    for (int k = 0; k < L; ++k) buf[static_cast<std::size_t>(k)] *= h_hat[static_cast<std::size_t>(k)];
    fftw_execute_dft(bwd, p, p);
    const double inv = 1.0 / L;
    for (int i = 0; i < n; ++i) y[i] = buf[static_cast<std::size_t>(i)] * inv;
  }
};

EffectiveModel::EffectiveModel(const ChainGeometry& chain, const std::vector<ImpurityQubit>& qubits)
    : impl_(std::make_unique<Impl>()) {
  emitters_ = chain.emitters();
  n_chain_ = chain.n_atoms();
  spacing_ = chain.spacing();
  for (const auto& q : qubits) {
    q.validate();
    emitters_.push_back(q.emitter());
  }
  n_extra_ = static_cast<int>(qubits.size());
  finish_setup();
}

EffectiveModel::EffectiveModel(std::vector<Emitter> emitters)
    : emitters_(std::move(emitters)), impl_(std::make_unique<Impl>()) {
  if (emitters_.empty()) throw Error(ErrorCategory::domain, "model needs at least one emitter");
  for (const auto& e : emitters_) {
    if (!(e.gamma0 > 0.0)) throw Error(ErrorCategory::domain, "emitter linewidth must be positive");
    if (std::abs(e.dipole.norm() - 1.0) > 1e-12) {
      throw Error(ErrorCategory::domain, "emitter dipole must be a unit vector");
    }
  }
  n_extra_ = static_cast<int>(emitters_.size());
  finish_setup();
}

EffectiveModel::~EffectiveModel() = default;
EffectiveModel::EffectiveModel(EffectiveModel&&) noexcept = default;
EffectiveModel& EffectiveModel::operator=(EffectiveModel&&) noexcept = default;

cplx EffectiveModel::element(int i, int j) const {
  const Emitter& a = emitters_[static_cast<std::size_t>(i)];
  if (i == j) return cplx(a.detuning, -0.5 * a.gamma0);
  return coupling_element(a, emitters_[static_cast<std::size_t>(j)]);
}

void EffectiveModel::finish_setup() {
  Impl& m = *impl_;
  const int n = n_chain_;
  const int q = n_extra_;
  std::vector<double> row_abs(static_cast<std::size_t>(size()), 0.0);
  if (n > 0) {
    m.h.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) m.h[static_cast<std::size_t>(j)] = element(0, j);
    double chain_row = 0.0;
    for (int j = 0; j < n; ++j) chain_row += (j == 0 ? 1.0 : 2.0) * std::abs(m.h[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i) row_abs[static_cast<std::size_t>(i)] = chain_row;
    if (n >= kFftThreshold) {
      m.L = fft_length(n);
      std::vector<cplx> col(static_cast<std::size_t>(m.L), cplx(0.0));
      for (int j = 0; j < n; ++j) col[static_cast<std::size_t>(j)] = m.h[static_cast<std::size_t>(j)];
      for (int j = 1; j < n; ++j) col[static_cast<std::size_t>(m.L - j)] = m.h[static_cast<std::size_t>(j)];
      {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        auto* p = reinterpret_cast<fftw_complex*>(col.data());
        m.fwd = fftw_plan_dft_1d(m.L, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        m.bwd = fftw_plan_dft_1d(m.L, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
      }
      if (!m.fwd || !m.bwd) throw Error(ErrorCategory::numerical, "FFT plan creation failed");
      fftw_execute_dft(m.fwd, reinterpret_cast<fftw_complex*>(col.data()),
                       reinterpret_cast<fftw_complex*>(col.data()));
      m.h_hat = std::move(col);
    }
  }
  m.b = CMatrix(n, q);
  m.c = CMatrix(q, n);
  m.e = CMatrix(q, q);
  for (int a = 0; a < q; ++a) {
    const int ia = n + a;
    for (int i = 0; i < n; ++i) {
      m.b(i, a) = element(i, ia);
      m.c(a, i) = element(ia, i);
      row_abs[static_cast<std::size_t>(i)] += std::abs(m.b(i, a));
      row_abs[static_cast<std::size_t>(ia)] += std::abs(m.c(a, i));
    }
    for (int b = 0; b < q; ++b) {
      m.e(a, b) = element(ia, n + b);
      row_abs[static_cast<std::size_t>(ia)] += std::abs(m.e(a, b));
    }
  }
  norm_bound_ = 0.0;
  for (double r : row_abs) norm_bound_ = std::max(norm_bound_, r);
}

void EffectiveModel::apply(const CVector& x, CVector& y) const {
  const Impl& m = *impl_;
  const int n = n_chain_;
  const int q = n_extra_;
  y.resize(size());
  if (n > 0) {
    m.apply_chain(x.data(), y.data());
    if (q > 0) {
      y.head(n).noalias() += m.b * x.tail(q);
    }
  }
  if (q > 0) {
    y.tail(q).noalias() = m.e * x.tail(q);
    if (n > 0) y.tail(q).noalias() += m.c * x.head(n);
  }
}

void EffectiveModel::apply_block(const CMatrix& x, CMatrix& y) const {
  // GEMM beats repeated FFTs until the dense matrix gets large.
  if (size() <= 1500) {
    y.noalias() = dense_hamiltonian() * x;
    return;
  }
  y.resize(x.rows(), x.cols());
  CVector in(size()), out(size());
  for (Eigen::Index k = 0; k < x.cols(); ++k) {
    in = x.col(k);
    apply(in, out);
    y.col(k) = out;
  }
}

const CMatrix& EffectiveModel::dense_hamiltonian() const {
  std::call_once(impl_->dense_once, [this] {
    const int m = size();
    const int n = n_chain_;
    CMatrix h(m, m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) h(i, j) = impl_->h[static_cast<std::size_t>(std::abs(i - j))];
    }
    if (n_extra_ > 0) {
      h.topRightCorner(n, n_extra_) = impl_->b;
      h.bottomLeftCorner(n_extra_, n) = impl_->c;
      h.bottomRightCorner(n_extra_, n_extra_) = impl_->e;
    }
    impl_->dense = std::move(h);
  });
  return impl_->dense;
}

CMatrix EffectiveModel::dense_gamma() const {
  // Gamma = i (H - H^dagger), since J and Gamma are Hermitian.
  const CMatrix& h = dense_hamiltonian();
  CMatrix g = kI * (h - h.adjoint());
  return 0.5 * (g + g.adjoint());
}

const JumpBasis& EffectiveModel::jump_basis() const {
  std::call_once(impl_->jump_once, [this] {
    try {
      Eigen::SelfAdjointEigenSolver<CMatrix> es(dense_gamma());
      if (es.info() != Eigen::Success) {
        throw Error(ErrorCategory::numerical, "dissipation matrix diagonalization failed");
      }
      RVector rates = es.eigenvalues();
      for (Eigen::Index k = 0; k < rates.size(); ++k) {
        if (rates(k) < -1e-10) {
          throw Error(ErrorCategory::numerical,
                      "dissipation matrix has eigenvalue " + std::to_string(rates(k)) +
                          " below the clipping threshold");
        }
        rates(k) = std::max(rates(k), 0.0);
      }
      impl_->jumps = JumpBasis{rates, es.eigenvectors()};
    } catch (...) {
      impl_->jump_error = std::current_exception();
    }
  });
  if (impl_->jump_error) std::rethrow_exception(impl_->jump_error);
  return impl_->jumps;
}

EffectiveModel build_model(const ChainGeometry& chain, const std::vector<ImpurityQubit>& qubits) {
  return EffectiveModel(chain, qubits);
}

EffectiveModel build_model(std::vector<Emitter> emitters) {
  return EffectiveModel(std::move(emitters));
}

}  // namespace awg
