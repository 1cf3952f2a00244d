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

#include "atomwg/fit.hpp"

#include <algorithm>
#include <cmath>

#include "atomwg/types.hpp"

namespace awg {

namespace {

struct Line {
  double slope, intercept, slope_stderr, residual;
};

Line linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw Error(ErrorCategory::domain, "fit abscissae are all equal");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    rss += r * r;
  }
  const double se = x.size() > 2 ? std::sqrt(rss / (n - 2.0) / sxx) : 0.0;
  return {slope, intercept, se, std::sqrt(rss)};
}

// Lorentzian averaged over a discrete spread of abscissa shifts.
struct Kernel {
  const std::vector<double>& shift;
  const std::vector<double>& weight;
};

double lorentz(const Eigen::Vector4d& p, const Kernel& k, double x, double* grad) {
  double v = 0.0, g0 = 0.0, g1 = 0.0;
  for (std::size_t m = 0; m < k.shift.size(); ++m) {
    const double u = 2.0 * (x + k.shift[m] - p(0)) / p(1);
    const double den = 1.0 + u * u;
    v += k.weight[m] / den;
    const double g = k.weight[m] * p(2) / (den * den) * 2.0 * u;
    g0 += g * 2.0 / p(1);
    g1 += g * u / p(1);
  }
  if (grad) {
    grad[0] = g0;
    grad[1] = g1;
    grad[2] = v;
    grad[3] = 1.0;
  }
  return p(3) + p(2) * v;
}

}  // namespace

LorentzianFit fit_lorentzian(const std::vector<double>& x, const std::vector<double>& y) {
  return fit_lorentzian_broadened(x, y, {0.0}, {1.0});
}

LorentzianFit fit_lorentzian_broadened(const std::vector<double>& x, const std::vector<double>& y,
                                       const std::vector<double>& shift,
                                       const std::vector<double>& weight) {
  const std::size_t n = x.size();
  if (n != y.size()) throw Error(ErrorCategory::domain, "x and y lengths differ");
  if (n < 8) throw Error(ErrorCategory::domain, "Lorentzian fit needs at least 8 points");
  if (shift.empty() || shift.size() != weight.size())
    throw Error(ErrorCategory::domain, "broadening kernel is empty or mismatched");
  std::vector<double> w = weight;
  double wsum = 0.0;
  for (double v : w) wsum += v;
  if (!(wsum > 0.0)) throw Error(ErrorCategory::domain, "broadening weights must sum to a positive value");
  for (double& v : w) v /= wsum;
  const Kernel kern{shift, w};

  // Initial guess: offset from the edges, extremum relative to it.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  const double offset0 = 0.5 * (y[order.front()] + y[order.back()]);
  std::size_t ext = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(y[i] - offset0) > std::abs(y[ext] - offset0)) ext = i;
  }
  const double amp0 = y[ext] - offset0;
  double above = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(y[i] - offset0) >= 0.5 * std::abs(amp0)) ++above;
  }
  const double span = x[order.back()] - x[order.front()];
  double w0 = std::max(span * above / n, 2.0 * span / n);

  Eigen::Vector4d p(x[ext], w0, amp0, offset0);
  auto residuals = [&](const Eigen::Vector4d& q) {
    Eigen::VectorXd r(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) r(static_cast<Eigen::Index>(i)) = y[i] - lorentz(q, kern, x[i], nullptr);
    return r;
  };
  LorentzianFit out;
  double lambda = 1e-3;
  Eigen::VectorXd r = residuals(p);
  double cost = r.squaredNorm();
  for (int it = 1; it <= 200; ++it) {
    out.iterations = it;
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(n), 4);
    for (std::size_t i = 0; i < n; ++i) {
      double g[4];
      lorentz(p, kern, x[i], g);
      for (int c = 0; c < 4; ++c) jac(static_cast<Eigen::Index>(i), c) = g[c];
    }
    const Eigen::Matrix4d jtj = jac.transpose() * jac;
    const Eigen::Vector4d jtr = jac.transpose() * r;
    bool improved = false;
    Eigen::Vector4d step = Eigen::Vector4d::Zero();
    for (int tries = 0; tries < 30; ++tries) {
      Eigen::Matrix4d a = jtj;
      a.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-300);
      step = a.ldlt().solve(jtr);
      Eigen::Vector4d trial = p + step;
      if (trial(1) <= 0.0) trial(1) = 0.5 * p(1);
      const Eigen::VectorXd rt = residuals(trial);
      const double ct = rt.squaredNorm();
      if (std::isfinite(ct) && ct <= cost) {
        step = trial - p;
        p = trial;
        r = rt;
        cost = ct;
        lambda = std::max(lambda * 0.3, 1e-12);
        improved = true;
        break;
      }
      lambda *= 10.0;
    }
    const double rel = step.norm() / std::max(p.norm(), 1e-300);
    // no downhill step left means we sit at a minimum to working precision
    if (!improved || rel < 1e-10) {
      out.converged = true;
      break;
    }
  }
  out.center = p(0);
  out.fwhm = std::abs(p(1));
  out.amplitude = p(2);
  out.offset = p(3);
  out.residual = std::sqrt(cost);
  return out;
}

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(ErrorCategory::domain, "x and y lengths differ");
  if (x.size() < 4) throw Error(ErrorCategory::domain, "power-law fit needs at least 4 points");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw Error(ErrorCategory::domain, "power-law fit needs positive data");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const Line l = linear_fit(lx, ly);
  return {std::exp(l.intercept), l.slope, l.slope_stderr, l.residual};
}

ExponentialFit fit_exponential(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(ErrorCategory::domain, "x and y lengths differ");
  if (x.size() < 2) throw Error(ErrorCategory::domain, "exponential fit needs at least 2 points");
  std::vector<double> ly;
  for (double v : y) {
    if (!(v > 0.0)) throw Error(ErrorCategory::domain, "exponential fit needs positive data");
    ly.push_back(std::log(v));
  }
  const Line l = linear_fit(x, ly);
  return {std::exp(l.intercept), -l.slope, l.slope_stderr};
}

}  // namespace awg
