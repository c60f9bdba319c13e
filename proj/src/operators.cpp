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

#include "phasekit/operators.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phasekit {

namespace {

using Triplet = LinearOperator::Triplet;

}  // namespace

LinearOperator helicity(const TruncationWindow& w) {
  std::vector<Triplet> entries;
  entries.reserve(w.dimension());
  for (int n = w.n_min(); n <= w.n_max(); ++n) {
    entries.emplace_back(w.ordinal_of(n), w.ordinal_of(n),
                         Complex(helicity_of(n), 0.0));
  }
  return LinearOperator::from_triplets(w, entries);
}

LinearOperator projector(int sign, const TruncationWindow& w) {
  if (sign != +1 && sign != -1) {
    throw std::invalid_argument("projector sign must be +1 or -1");
  }
  std::vector<Triplet> entries;
  for (int n = w.n_min(); n <= w.n_max(); ++n) {
    if (helicity_of(n) == sign) {
      entries.emplace_back(w.ordinal_of(n), w.ordinal_of(n),
                           Complex(1.0, 0.0));
    }
  }
  return LinearOperator::from_triplets(w, entries);
}

LinearOperator bridge(const TruncationWindow& w) {
  std::vector<Triplet> entries;
  entries.emplace_back(w.ordinal_of(-1), w.ordinal_of(0), Complex(1.0, 0.0));
  return LinearOperator::from_triplets(w, entries);
}

LinearOperator annihilation_modified(const TruncationWindow& w) {
  std::vector<Triplet> entries;
  for (int n = w.n_min(); n <= w.n_max(); ++n) {
    if (!w.contains(n - 1)) {
      continue;  // open edge: |n_min> -> 0
    }
    const double step = n == 0 ? 1.0 : std::sqrt(std::abs(n));
    entries.emplace_back(w.ordinal_of(n - 1), w.ordinal_of(n),
                         Complex(step, 0.0));
  }
  return LinearOperator::from_triplets(w, entries);
}

LinearOperator creation_modified(const TruncationWindow& w) {
  std::vector<Triplet> entries;
  for (int n = w.n_min(); n <= w.n_max(); ++n) {
    if (!w.contains(n + 1)) {
      continue;
    }
    const double step = n == -1 ? 1.0 : std::sqrt(std::abs(n + 1));
    entries.emplace_back(w.ordinal_of(n + 1), w.ordinal_of(n),
                         Complex(step, 0.0));
  }
  return LinearOperator::from_triplets(w, entries);
}

LinearOperator number_modified(const TruncationWindow& w) {
  std::vector<Triplet> entries;
  entries.reserve(w.dimension());
  for (int n = w.n_min(); n <= w.n_max(); ++n) {
    entries.emplace_back(w.ordinal_of(n), w.ordinal_of(n), Complex(n, 0.0));
  }
  return LinearOperator::from_triplets(w, entries);
}

LinearOperator susskind_glogower(const TruncationWindow& w,
                                 BoundaryMode mode) {
  std::vector<Triplet> entries;
  for (int n = w.n_min() + 1; n <= w.n_max(); ++n) {
    entries.emplace_back(w.ordinal_of(n - 1), w.ordinal_of(n),
                         Complex(1.0, 0.0));
  }
  if (mode == BoundaryMode::Cyclic) {
    entries.emplace_back(w.ordinal_of(w.n_max()), w.ordinal_of(w.n_min()),
                         Complex(1.0, 0.0));
  }
  return LinearOperator::from_triplets(w, entries);
}

LinearOperator phase_operator(const TruncationWindow& w, BoundaryMode mode) {
  if (mode == BoundaryMode::Open) {
    throw std::invalid_argument(
        "phase operator requires the cyclic boundary mode: the open-mode "
        "shift is not unitary and has no Hermitian logarithm");
  }
  return phase_operator(w);
}

LinearOperator phase_operator(const TruncationWindow& w) {
  const Eigen::MatrixXcd shift =
      susskind_glogower(w, BoundaryMode::Cyclic).dense();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(shift);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition of the cyclic shift failed");
  }
  const int d = w.dimension();
  // The cyclic shift has the d distinct d-th roots of unity as eigenvalues,
  // so its eigenvectors are orthogonal; summing theta_k |v_k><v_k| with real
  // theta_k gives a Hermitian matrix whose exponential restores the shift.
  Eigen::VectorXd phases(d);
  for (int k = 0; k < d; ++k) {
    double theta = std::arg(solver.eigenvalues()(k));
    if (theta <= -std::numbers::pi + 1e-9) {
      theta += 2.0 * std::numbers::pi;  // keep eigenphases on (-pi, pi]
    }
    phases(k) = theta;
  }
  Eigen::MatrixXcd phase = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const Eigen::VectorXcd v =
        solver.eigenvectors().col(k).normalized();
    phase.noalias() += phases(k) * (v * v.adjoint());
  }
  return LinearOperator::from_dense(w, std::move(phase));
}

LinearOperator unitary_exp_i(const LinearOperator& hermitian) {
  const Eigen::MatrixXcd h = hermitian.dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed in unitary_exp_i");
  }
  const Eigen::VectorXcd phases =
      (Complex(0.0, 1.0) * solver.eigenvalues().cast<Complex>()).array().exp();
  Eigen::MatrixXcd u = solver.eigenvectors() * phases.asDiagonal() *
                       solver.eigenvectors().adjoint();
  return LinearOperator::from_dense(hermitian.window(), std::move(u));
}

}  // namespace phasekit
