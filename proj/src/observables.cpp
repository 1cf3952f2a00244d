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

#include "atomwg/observables.hpp"

#include <cmath>

#include "atomwg/greens.hpp"

namespace awg {

RVector site_populations(const State& s) { return s.site_populations(); }

RVector qubit_populations(const State& s, const EffectiveModel& model) {
  const RVector p = s.site_populations();
  return p.tail(model.n_extra());
}

double total_excited_population(const State& s) { return s.site_populations().sum(); }

double two_exc_population(const State& s) { return s.manifold == 2 ? s.norm_sq() : 0.0; }

std::optional<double> chirality(const State& s, const EffectiveModel& model, int qubit) {
  if (qubit < 0 || qubit >= model.n_extra()) throw Error(ErrorCategory::domain, "qubit index out of range");
  const RVector p = s.site_populations();
  const double zq = model.emitters()[static_cast<std::size_t>(model.qubit_index(qubit))].position.z();
  double left = 0.0, right = 0.0;
  for (int i = 0; i < model.n_chain(); ++i) {
    const double z = model.emitters()[static_cast<std::size_t>(i)].position.z();
    if (z < zq) left += p(i);
    if (z > zq) right += p(i);
  }
  if (left + right < 1e-15) return std::nullopt;
  return (left - right) / (left + right);
}

CVec3 field_expectation(const State& s, const EffectiveModel& model, const Vec3& r) {
  if (s.manifold != 1) throw Error(ErrorCategory::domain, "field amplitude is defined for single excitations");
  CVec3 e = CVec3::Zero();
  for (int j = 0; j < model.size(); ++j) {
    const Emitter& em = model.emitters()[static_cast<std::size_t>(j)];
    e += greens_free(r, em.position) * em.dipole * (std::sqrt(em.gamma0) * s.amplitudes(j));
  }
  return e;
}

Observer population_observer(std::vector<PopulationGroup> groups) {
  Observer o;
  o.names = {"norm", "total", "two_exc"};
  for (const auto& g : groups) o.names.push_back(g.name);
  o.eval = [groups = std::move(groups)](const State& s, double* out) {
    const RVector p = s.site_populations();
    out[0] = s.norm_sq();
    out[1] = p.sum();
    out[2] = two_exc_population(s);
    for (std::size_t k = 0; k < groups.size(); ++k) {
      double acc = 0.0;
      for (int i : groups[k].sites) acc += p(i);
      out[3 + k] = acc;
    }
  };
  return o;
}

std::vector<PopulationGroup> qubit_groups(const EffectiveModel& model) {
  std::vector<PopulationGroup> g;
  for (int q = 0; q < model.n_extra(); ++q) g.push_back({"q" + std::to_string(q), {model.qubit_index(q)}});
  return g;
}

std::vector<PopulationGroup> site_groups(int n_emitters) {
  std::vector<PopulationGroup> g;
  for (int i = 0; i < n_emitters; ++i) g.push_back({"pop_" + std::to_string(i), {i}});
  return g;
}

}  // namespace awg
