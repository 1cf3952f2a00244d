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

#include "atomwg/states.hpp"

#include <cmath>

namespace awg {

std::pair<int, int> PairIndex::pair(long idx) const {
  // invert idx = i*m - i(i+1)/2 + (j - i - 1)
  int i = 0;
  long start = 0;
  while (i < m_ - 1) {
    const long row = m_ - 1 - i;
    if (idx < start + row) break;
    start += row;
    ++i;
  }
  return {i, static_cast<int>(i + 1 + (idx - start))};
}

RVector State::site_populations() const {
  RVector p = RVector::Zero(n_emitters);
  if (manifold == 1) {
    p = amplitudes.cwiseAbs2();
  } else if (manifold == 2) {
    long k = 0;
    for (int i = 0; i < n_emitters; ++i) {
      for (int j = i + 1; j < n_emitters; ++j, ++k) {
        const double w = std::norm(amplitudes(k));
        p(i) += w;
        p(j) += w;
      }
    }
  }
  return p;
}

State ground_state(int n_emitters) {
  State s;
  s.manifold = 0;
  s.n_emitters = n_emitters;
  s.amplitudes = CVector::Ones(1);
  return s;
}

State single_excitation(const CVector& amplitudes) {
  State s;
  s.manifold = 1;
  s.n_emitters = static_cast<int>(amplitudes.size());
  s.amplitudes = amplitudes;
  return s;
}

State excite_site(int n_emitters, int site) {
  if (site < 0 || site >= n_emitters) throw Error(ErrorCategory::domain, "site index out of range");
  CVector a = CVector::Zero(n_emitters);
  a(site) = 1.0;
  return single_excitation(a);
}

State excite_pair(int n_emitters, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n_emitters || j >= n_emitters) {
    throw Error(ErrorCategory::domain, "pair excitation needs two distinct valid sites");
  }
  PairIndex idx(n_emitters);
  CVector a = CVector::Zero(idx.size());
  a(idx.index(i, j)) = 1.0;
  return pair_state(n_emitters, a);
}

State pair_state(int n_emitters, const CVector& pair_amplitudes) {
  if (pair_amplitudes.size() != PairIndex(n_emitters).size()) {
    throw Error(ErrorCategory::domain, "pair amplitude vector has wrong length");
  }
  State s;
  s.manifold = 2;
  s.n_emitters = n_emitters;
  s.amplitudes = pair_amplitudes;
  return s;
}

CMatrix pair_matrix(const State& s) {
  const int m = s.n_emitters;
  CMatrix c = CMatrix::Zero(m, m);
  long k = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j, ++k) {
      c(i, j) = s.amplitudes(k);
      c(j, i) = s.amplitudes(k);
    }
  }
  return c;
}

CVector pack_pairs(const CMatrix& c) {
  const int m = static_cast<int>(c.rows());
  CVector out(PairIndex(m).size());
  long k = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j, ++k) out(k) = c(i, j);
  }
  return out;
}

}  // namespace awg
