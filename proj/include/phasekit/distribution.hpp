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

#ifndef PHASEKIT_DISTRIBUTION_HPP
#define PHASEKIT_DISTRIBUTION_HPP

#include "phasekit/fock_space.hpp"
#include "phasekit/states.hpp"

#include <vector>

namespace phasekit {

/// Phase probability density split by polarization: right branch, left
/// branch, and the cross-branch interference (which may go negative).
/// For the matrix path total is computed independently and equals
/// pR + pL + pI up to rounding.
struct DistributionComponents {
  double pR = 0.0;
  double pL = 0.0;
  double pI = 0.0;
  double total = 0.0;
};

/// Oscillation index of the interference double sum. The phase-state
/// amplitudes e^{i(n+1/2)phi} put the cross-branch terms at e^{i(n+m+1)phi}
/// (HalfIntegerDerived); the printed series use e^{i(n+m)phi}
/// (PaperLiteral). pR and pL are identical under both; the two conventions
/// coincide at phi = 0.
enum class ExponentConvention { PaperLiteral, HalfIntegerDerived };

enum class Method { Series, Oracle };

/// Equally spaced sample points covering [-pi, pi], endpoints included.
class PhaseGrid {
 public:
  /// Throws std::invalid_argument for resolution < 2.
  static PhaseGrid uniform(int resolution);

  const std::vector<double>& points() const noexcept { return points_; }
  int resolution() const noexcept { return static_cast<int>(points_.size()); }
  double spacing() const noexcept { return spacing_; }

 private:
  PhaseGrid(std::vector<double> points, double spacing)
      : points_(std::move(points)), spacing_(spacing) {}
  std::vector<double> points_;
  double spacing_;
};

/// Unnormalized rank-one phase projector |phi><phi| as a dense matrix;
/// entry (n, m) is e^{i(n-m)phi} / 2pi.
LinearOperator phase_density_matrix(double phi, const TruncationWindow& w);

/// Matrix-path density at one phase: total = <psi|rho_phi|psi> and the
/// helicity-projected pieces pR = <psi|P+ rho P+|psi>,
/// pL = <psi|P- rho P-|psi>, pI = <psi|P+ rho P- + P- rho P+|psi>.
DistributionComponents pdf_oracle(const KetVector& psi, double phi);

/// Partial double sums of the coherent-state series, n_terms in each
/// index. Throws std::invalid_argument for n_terms < 1.
DistributionComponents coherent_pdf_series(Complex alpha, double phi,
                                           int n_terms,
                                           ExponentConvention conv);

/// Same for the displaced-squeezed expansion; the negative branch uses the
/// positive-branch coefficients (mirror rule of squeezed_state).
DistributionComponents squeezed_pdf_series(const SqueezeParams& p, double phi,
                                           int n_terms,
                                           ExponentConvention conv);

/// Thermal closed forms (geometric sums, no truncation):
///   pR = pL = k / (1 - q^2),            k = 1/(2 pi (1+nbar)^2),
///   pI = 2k Re[ 1 / (1 - q^2 e^{2 i phi}) ]            (PaperLiteral)
///   pI = 2k Re[ e^{i phi} / (1 - q^2 e^{2 i phi}) ]    (HalfIntegerDerived)
/// with q = nbar/(1+nbar).
DistributionComponents thermal_pdf_series(
    const ThermalParams& p, double phi,
    ExponentConvention conv = ExponentConvention::PaperLiteral);

/// Matrix path for the thermal case: the amplitude reading carries a
/// completely random overall phase per number state, so the density is the
/// uniform average of pdf_oracle over dephased copies of the amplitude
/// state. A K-point average is exact (discrete orthogonality) once K
/// exceeds every index difference in the window, which this uses.
DistributionComponents thermal_dephased_oracle(const ThermalParams& p,
                                               const TruncationWindow& w,
                                               double phi);

/// Which state a sampling run describes.
struct StateSpec {
  enum class Kind { Coherent, Squeezed, Thermal };
  Kind kind = Kind::Coherent;
  Complex alpha{1.0, 0.0};  // coherent / squeezed displacement
  double r = 1.0;           // squeeze magnitude
  double theta = 0.0;       // squeeze angle
  double nbar = 1.0;        // thermal mean photon number
};

struct SampleOptions {
  TruncationWindow window;
  Method method = Method::Series;
  ExponentConvention convention = ExponentConvention::HalfIntegerDerived;
  NormalizationPolicy normalization = NormalizationPolicy::PaperLiteral;
};

struct PhaseDistribution {
  PhaseGrid grid;
  std::vector<DistributionComponents> rows;
};

/// Samples one distribution row per grid point. The series path truncates
/// each branch to exactly the window's branch capacity so the two methods
/// describe the same truncated state; Unit normalization rescales by the
/// squared norm of the window-truncated state. Rows depend only on their
/// own grid point, so any evaluation order yields the identical table.
PhaseDistribution grid_sample(const StateSpec& state, const PhaseGrid& grid,
                              const SampleOptions& options);

struct ComponentIntegrals {
  double pR = 0.0;
  double pL = 0.0;
  double pI = 0.0;
  double total = 0.0;
};

/// Composite trapezoid over [-pi, pi] per component. The integrands are
/// smooth and periodic, so the rule is spectrally accurate; grids coarser
/// than 33 points are rejected.
ComponentIntegrals integrate(const PhaseDistribution& dist);

}  // namespace phasekit

#endif  // PHASEKIT_DISTRIBUTION_HPP
