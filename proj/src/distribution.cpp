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

#include "phasekit/distribution.hpp"

#include "phasekit/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phasekit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e^{i k phi} for k in [-max_k, max_k], table index offset by max_k.
std::vector<Complex> phase_factors(double phi, int max_k) {
  std::vector<Complex> table(2 * max_k + 1);
  for (int k = -max_k; k <= max_k; ++k) {
    table[k + max_k] = std::polar(1.0, k * phi);
  }
  return table;
}

// Literal double sums over branch coefficients:
//   pR = (1/2pi) Re sum_{n,m} conj(cpos[n]) cpos[m] e^{ i(n-m) phi}
//   pL = (1/2pi) Re sum_{n,m} conj(cneg[n]) cneg[m] e^{-i(n-m) phi}
//   pI = (1/pi)  Re sum_{n,m} conj(cpos[n]) cneg[m] e^{ i(n+m+c) phi}
// with c = 0 (PaperLiteral) or 1 (HalfIntegerDerived).
DistributionComponents bilinear_components(const std::vector<Complex>& cpos,
                                           const std::vector<Complex>& cneg,
                                           double phi,
                                           ExponentConvention conv) {
  const int np = static_cast<int>(cpos.size());
  const int nm = static_cast<int>(cneg.size());
  const int max_k = std::max(std::max(np, nm), np + nm + 1);
  const auto e = phase_factors(phi, max_k);
  const auto at = [&](int k) { return e[k + max_k]; };

  Complex right(0.0, 0.0);
  for (int n = 0; n < np; ++n) {
    for (int m = 0; m < np; ++m) {
      right += std::conj(cpos[n]) * cpos[m] * at(n - m);
    }
  }
  Complex left(0.0, 0.0);
  for (int n = 0; n < nm; ++n) {
    for (int m = 0; m < nm; ++m) {
      left += std::conj(cneg[n]) * cneg[m] * at(-(n - m));
    }
  }
  const int shift = conv == ExponentConvention::HalfIntegerDerived ? 1 : 0;
  Complex cross(0.0, 0.0);
  for (int n = 0; n < np; ++n) {
    for (int m = 0; m < nm; ++m) {
      cross += std::conj(cpos[n]) * cneg[m] * at(n + m + shift);
    }
  }

  DistributionComponents out;
  out.pR = right.real() / kTwoPi;
  out.pL = left.real() / kTwoPi;
  out.pI = 2.0 * cross.real() / kTwoPi;
  out.total = out.pR + out.pL + out.pI;
  return out;
}

DistributionComponents scaled(DistributionComponents c, double factor) {
  c.pR *= factor;
  c.pL *= factor;
  c.pI *= factor;
  c.total *= factor;
  return c;
}

KetVector paper_literal_state(const StateSpec& state,
                              const TruncationWindow& w) {
  switch (state.kind) {
    case StateSpec::Kind::Coherent:
      return coherent_state(state.alpha, w, NormalizationPolicy::PaperLiteral);
    case StateSpec::Kind::Squeezed:
      return squeezed_state({state.alpha, state.r, state.theta}, w,
                            NormalizationPolicy::PaperLiteral);
    case StateSpec::Kind::Thermal:
      return thermal_amplitude_state({state.nbar}, w);
  }
  throw std::invalid_argument("unknown state descriptor");
}

}  // namespace

PhaseGrid PhaseGrid::uniform(int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("grid resolution must be >= 2");
  }
  const double spacing = kTwoPi / (resolution - 1);
  std::vector<double> points(resolution);
  for (int k = 0; k < resolution; ++k) {
    points[k] = -std::numbers::pi + k * spacing;
  }
  points.front() = -std::numbers::pi;
  points.back() = std::numbers::pi;  // pin endpoints against rounding drift
  return PhaseGrid(std::move(points), spacing);
}

LinearOperator phase_density_matrix(double phi, const TruncationWindow& w) {
  const KetVector v = phase_state(phi, w);
  Eigen::MatrixXcd rho = v.amplitudes() * v.amplitudes().adjoint();
  return LinearOperator::from_dense(w, std::move(rho));
}

DistributionComponents pdf_oracle(const KetVector& psi, double phi) {
  const TruncationWindow& w = psi.window();
  const LinearOperator rho = phase_density_matrix(phi, w);
  const KetVector psi_pos = apply(projector(+1, w), psi);
  const KetVector psi_neg = apply(projector(-1, w), psi);
  DistributionComponents out;
  out.pR = std::real(inner(psi_pos, apply(rho, psi_pos)));
  out.pL = std::real(inner(psi_neg, apply(rho, psi_neg)));
  out.pI = 2.0 * std::real(inner(psi_pos, apply(rho, psi_neg)));
  out.total = std::real(inner(psi, apply(rho, psi)));
  return out;
}

DistributionComponents coherent_pdf_series(Complex alpha, double phi,
                                           int n_terms,
                                           ExponentConvention conv) {
  if (n_terms < 1) {
    throw std::invalid_argument("series needs at least one term");
  }
  const auto c = coherent_coefficients(alpha, n_terms);
  return bilinear_components(c, c, phi, conv);
}

DistributionComponents squeezed_pdf_series(const SqueezeParams& p, double phi,
                                           int n_terms,
                                           ExponentConvention conv) {
  if (n_terms < 1) {
    throw std::invalid_argument("series needs at least one term");
  }
  const auto c = squeezed_coefficients(p, n_terms);
  return bilinear_components(c, c, phi, conv);
}

DistributionComponents thermal_pdf_series(const ThermalParams& p, double phi,
                                          ExponentConvention conv) {
  if (p.nbar < 0.0 || !std::isfinite(p.nbar)) {
    throw std::invalid_argument("mean photon number nbar must be >= 0");
  }
  const double q = p.nbar / (1.0 + p.nbar);
  const double k0 = 1.0 / (kTwoPi * (1.0 + p.nbar) * (1.0 + p.nbar));
  const Complex denominator =
      Complex(1.0, 0.0) - q * q * std::polar(1.0, 2.0 * phi);
  DistributionComponents out;
  out.pR = k0 / (1.0 - q * q);
  out.pL = out.pR;
  Complex cross = Complex(1.0, 0.0) / denominator;
  if (conv == ExponentConvention::HalfIntegerDerived) {
    cross *= std::polar(1.0, phi);
  }
  out.pI = 2.0 * k0 * cross.real();
  out.total = out.pR + out.pL + out.pI;
  return out;
}

DistributionComponents thermal_dephased_oracle(const ThermalParams& p,
                                               const TruncationWindow& w,
                                               double phi) {
  const auto pos = thermal_weights(p, w.n_max() + 1);
  const auto neg = thermal_weights(p, -w.n_min());
  const int branch = std::max(w.n_max() + 1, -w.n_min());
  const int ensemble = std::max(branch, 1);

  const LinearOperator rho = phase_density_matrix(phi, w);
  const LinearOperator proj_pos = projector(+1, w);
  const LinearOperator proj_neg = projector(-1, w);

  DistributionComponents acc;
  for (int k = 0; k < ensemble; ++k) {
    const double chi = kTwoPi * k / ensemble;
    KetVector psi(w);
    for (int n = 0; n < static_cast<int>(pos.size()); ++n) {
      psi.set_amp(n, std::polar(pos[n], n * chi));
    }
    for (int n = 0; n < static_cast<int>(neg.size()); ++n) {
      psi.set_amp(-n - 1, std::polar(neg[n], n * chi));
    }
    const KetVector psi_pos = apply(proj_pos, psi);
    const KetVector psi_neg = apply(proj_neg, psi);
    acc.pR += std::real(inner(psi_pos, apply(rho, psi_pos)));
    acc.pL += std::real(inner(psi_neg, apply(rho, psi_neg)));
    acc.pI += 2.0 * std::real(inner(psi_pos, apply(rho, psi_neg)));
    acc.total += std::real(inner(psi, apply(rho, psi)));
  }
  return scaled(acc, 1.0 / ensemble);
}

PhaseDistribution grid_sample(const StateSpec& state, const PhaseGrid& grid,
                              const SampleOptions& options) {
  const TruncationWindow& w = options.window;

  double unit_scale = 1.0;
  if (options.normalization == NormalizationPolicy::Unit) {
    const double squared_norm = std::pow(norm(paper_literal_state(state, w)), 2);
    if (squared_norm == 0.0) {
      throw std::invalid_argument("cannot normalize a vanishing state");
    }
    unit_scale = 1.0 / squared_norm;
  }

  // Matched truncation: each series branch stops exactly where the window
  // does, so series and matrix rows describe the same truncated state.
  const int pos_terms = w.n_max() + 1;
  const int neg_terms = -w.n_min();

  PhaseDistribution dist{grid, {}};
  dist.rows.reserve(grid.resolution());
  for (const double phi : grid.points()) {
    DistributionComponents row;
    if (options.method == Method::Series) {
      switch (state.kind) {
        case StateSpec::Kind::Coherent: {
          const auto cpos = coherent_coefficients(state.alpha, pos_terms);
          const auto cneg = coherent_coefficients(state.alpha, neg_terms);
          row = bilinear_components(cpos, cneg, phi, options.convention);
          break;
        }
        case StateSpec::Kind::Squeezed: {
          const SqueezeParams p{state.alpha, state.r, state.theta};
          const auto cpos = squeezed_coefficients(p, pos_terms);
          const auto cneg = squeezed_coefficients(p, neg_terms);
          row = bilinear_components(cpos, cneg, phi, options.convention);
          break;
        }
        case StateSpec::Kind::Thermal:
          row = thermal_pdf_series({state.nbar}, phi, options.convention);
          break;
        default:
          throw std::invalid_argument("unknown state descriptor");
      }
    } else {
      if (state.kind == StateSpec::Kind::Thermal) {
        row = thermal_dephased_oracle({state.nbar}, w, phi);
      } else {
        row = pdf_oracle(paper_literal_state(state, w), phi);
      }
    }
    dist.rows.push_back(scaled(row, unit_scale));
  }
  return dist;
}

ComponentIntegrals integrate(const PhaseDistribution& dist) {
  const int resolution = dist.grid.resolution();
  if (resolution < 33) {
    throw std::invalid_argument(
        "integration needs a grid of at least 33 points");
  }
  const double h = dist.grid.spacing();
  ComponentIntegrals sums;
  for (int k = 0; k < resolution; ++k) {
    const double weight = (k == 0 || k == resolution - 1) ? 0.5 : 1.0;
    sums.pR += weight * dist.rows[k].pR;
    sums.pL += weight * dist.rows[k].pL;
    sums.pI += weight * dist.rows[k].pI;
    sums.total += weight * dist.rows[k].total;
  }
  sums.pR *= h;
  sums.pL *= h;
  sums.pI *= h;
  sums.total *= h;
  return sums;
}

}  // namespace phasekit
