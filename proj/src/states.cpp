// Copyright 2026 The phasekit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phasekit/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phasekit {

namespace {

constexpr double kSqueezeFreeEps = 1e-12;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

// Places branch coefficients into a window: index k of the positive branch
// on label k, index k of the negative branch on label -k-1.
KetVector assemble_two_branch(const std::vector<Complex>& positive,
                              const std::vector<Complex>& negative,
                              const TruncationWindow& w) {
  KetVector v(w);
  for (int k = 0; k < static_cast<int>(positive.size()); ++k) {
    v.set_amp(k, positive[k]);
  }
  for (int k = 0; k < static_cast<int>(negative.size()); ++k) {
    v.set_amp(-k - 1, negative[k]);
  }
  return v;
}

KetVector apply_policy(KetVector v, NormalizationPolicy policy) {
  if (policy == NormalizationPolicy::Unit) {
    return normalized(v);
  }
  return v;
}

}  // namespace

Complex SqueezeParams::gamma() const {
  return alpha * std::cosh(r) +
         std::conj(alpha) * std::polar(1.0, theta) * std::sinh(r);
}

Complex hermite(int n, Complex z) {
  if (n < 0) {
    throw std::invalid_argument("hermite order must be >= 0");
  }
  Complex h_prev(1.0, 0.0);  // H_0
  if (n == 0) {
    return h_prev;
  }
  Complex h = 2.0 * z;  // H_1
  for (int k = 1; k < n; ++k) {
    const Complex h_next = 2.0 * z * h - 2.0 * static_cast<double>(k) * h_prev;
    h_prev = h;
    h = h_next;
  }
  return h;
}

std::vector<Complex> coherent_coefficients(Complex alpha, int count) {
  if (count < 0) {
    throw std::invalid_argument("coefficient count must be >= 0");
  }
  std::vector<Complex> c(count);
  if (count == 0) {
    return c;
  }
  c[0] = Complex(std::exp(-0.5 * std::norm(alpha)), 0.0);
  for (int n = 1; n < count; ++n) {
    c[n] = c[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  }
  return c;
}

std::vector<Complex> squeezed_coefficients(const SqueezeParams& p,
                                           int count) {
  if (count < 0) {
    throw std::invalid_argument("coefficient count must be >= 0");
  }
  require_finite(p.r, "squeeze magnitude r");
  require_finite(p.theta, "squeeze angle theta");
  if (std::abs(p.r) < kSqueezeFreeEps) {
    // Removable singularity of (sinh 2r)^{-1/2}: the squeeze-free limit is
    // the coherent expansion.
    return coherent_coefficients(p.alpha, count);
  }
  std::vector<Complex> c(count);
  if (count == 0) {
    return c;
  }
  const Complex phase = std::polar(1.0, p.theta);
  const Complex b = 0.5 * phase * std::tanh(p.r);
  const Complex z = p.gamma() / std::sqrt(phase * std::sinh(2.0 * p.r));
  const Complex prefactor =
      std::exp(-0.5 * (std::norm(p.alpha) +
                       std::conj(p.alpha) * std::conj(p.alpha) * phase *
                           std::tanh(p.r))) /
      std::sqrt(std::cosh(p.r));

  // Scaled recurrence for t_n = b^{n/2} H_n(z) / sqrt(n!); dividing out the
  // factorial at each step keeps the iterates bounded where raw H_n(z)
  // would overflow.
  const Complex sqrt_b = std::sqrt(b);
  Complex t_prev(1.0, 0.0);
  c[0] = prefactor * t_prev;
  if (count == 1) {
    return c;
  }
  Complex t = 2.0 * z * sqrt_b;
  c[1] = prefactor * t;
  for (int n = 1; n + 1 < count; ++n) {
    const Complex t_next =
        (2.0 * z * sqrt_b * t -
         2.0 * std::sqrt(static_cast<double>(n)) * b * t_prev) /
        std::sqrt(static_cast<double>(n + 1));
    t_prev = t;
    t = t_next;
    c[n + 1] = prefactor * t;
  }
  return c;
}

std::vector<double> thermal_weights(const ThermalParams& p, int count) {
  if (p.nbar < 0.0 || !std::isfinite(p.nbar)) {
    throw std::invalid_argument("mean photon number nbar must be >= 0");
  }
  if (count < 0) {
    throw std::invalid_argument("coefficient count must be >= 0");
  }
  std::vector<double> weights(count);
  if (count == 0) {
    return weights;
  }
  const double q = p.nbar / (1.0 + p.nbar);
  weights[0] = 1.0 / (1.0 + p.nbar);
  for (int n = 1; n < count; ++n) {
    weights[n] = weights[n - 1] * q;
  }
  return weights;
}

KetVector coherent_state(Complex alpha, const TruncationWindow& w,
                         NormalizationPolicy norm) {
  const auto pos = coherent_coefficients(alpha, w.n_max() + 1);
  const auto neg = coherent_coefficients(alpha, -w.n_min());
  return apply_policy(assemble_two_branch(pos, neg, w), norm);
}

KetVector squeezed_state(const SqueezeParams& p, const TruncationWindow& w,
                         NormalizationPolicy norm) {
  const auto pos = squeezed_coefficients(p, w.n_max() + 1);
  const auto neg = squeezed_coefficients(p, -w.n_min());
  return apply_policy(assemble_two_branch(pos, neg, w), norm);
}

KetVector thermal_amplitude_state(const ThermalParams& p,
                                  const TruncationWindow& w) {
  const auto pos = thermal_weights(p, w.n_max() + 1);
  const auto neg = thermal_weights(p, -w.n_min());
  KetVector v(w);
  for (int k = 0; k < static_cast<int>(pos.size()); ++k) {
    v.set_amp(k, Complex(pos[k], 0.0));
  }
  for (int k = 0; k < static_cast<int>(neg.size()); ++k) {
    v.set_amp(-k - 1, Complex(neg[k], 0.0));
  }
  return v;
}

KetVector phase_state(double phi, const TruncationWindow& w) {
  if (!(std::abs(phi) <= std::numbers::pi + 1e-12)) {
    throw std::invalid_argument("phase must lie in [-pi, pi]");
  }
  const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  KetVector v(w);
  for (int n = w.n_min(); n <= w.n_max(); ++n) {
    v.set_amp(n, std::polar(scale, (n + 0.5) * phi));
  }
  return v;
}

}  // namespace phasekit
