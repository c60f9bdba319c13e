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

#ifndef PHASEKIT_STATES_HPP
#define PHASEKIT_STATES_HPP

#include "phasekit/fock_space.hpp"

#include <vector>

namespace phasekit {

/// Squeeze parameterization xi = r e^{i theta} plus displacement alpha.
/// r may take either sign; theta is in radians.
struct SqueezeParams {
  Complex alpha;
  double r = 0.0;
  double theta = 0.0;

  /// gamma = alpha cosh r + conj(alpha) e^{i theta} sinh r, the argument
  /// feeding the Hermite factors of the number-state expansion.
  Complex gamma() const;
};

struct ThermalParams {
  double nbar = 0.0;  // mean photon number, >= 0
};

/// PaperLiteral keeps the two-branch amplitudes exactly as the defining
/// expansions print them (squared norm close to 2: each branch carries
/// full weight). Unit divides by that norm.
enum class NormalizationPolicy { PaperLiteral, Unit };

/// Physicists' Hermite polynomial H_n(z) by the recurrence
/// H_{k+1} = 2z H_k - 2k H_{k-1}. Throws std::invalid_argument for n < 0.
Complex hermite(int n, Complex z);

/// Branch coefficient c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), built
/// iteratively so c_{n+1}/c_n is exactly alpha/sqrt(n+1).
std::vector<Complex> coherent_coefficients(Complex alpha, int count);

/// Branch coefficient of the displaced-squeezed expansion,
///   c_n = A (b)^{n/2} H_n(z) / sqrt(n!),
/// with b = e^{i theta} tanh(r)/2, z = gamma (e^{i theta} sinh 2r)^{-1/2}
/// and A = exp(-[|alpha|^2 + conj(alpha)^2 e^{i theta} tanh r]/2)/sqrt(cosh r).
/// Complex powers take the principal branch; |r| below 1e-12 falls back to
/// the coherent limit, where only the n = 0 Hermite term survives.
std::vector<Complex> squeezed_coefficients(const SqueezeParams& p, int count);

/// Bose-Einstein weights P_n = nbar^n / (1+nbar)^{n+1}.
std::vector<double> thermal_weights(const ThermalParams& p, int count);

/// Two-branch coherent state: coefficient c_n on label n and again on
/// label -n-1, truncated to the window.
KetVector coherent_state(Complex alpha, const TruncationWindow& window,
                         NormalizationPolicy norm);

/// Two-branch displaced-squeezed state. The negative branch mirrors the
/// positive-branch coefficients (label -n-1 carries c_n).
KetVector squeezed_state(const SqueezeParams& p,
                         const TruncationWindow& window,
                         NormalizationPolicy norm);

/// Amplitude reading of the thermal mixture: weight P_n placed directly as
/// the amplitude on labels n and -n-1. The proper density-matrix treatment
/// is deliberately out of scope; this is the form the reproduced
/// distributions are built from.
KetVector thermal_amplitude_state(const ThermalParams& p,
                                  const TruncationWindow& window);

/// Phase eigenstate of the ladder shift: amplitude (2 pi)^{-1/2}
/// e^{i (n + 1/2) phi} on every in-window label n. Requires |phi| <= pi.
KetVector phase_state(double phi, const TruncationWindow& window);

}  // namespace phasekit

#endif  // PHASEKIT_STATES_HPP
