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

#ifndef PHASEKIT_FOCK_SPACE_HPP
#define PHASEKIT_FOCK_SPACE_HPP

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <complex>
#include <variant>
#include <vector>

namespace phasekit {

using Complex = std::complex<double>;

/// A mode label is a signed integer n: photon number and helicity in one
/// value. n >= 0 carries positive helicity, n <= -1 negative helicity; the
/// sign is the single source of truth, never stored separately.
inline int helicity_of(int n) noexcept { return n >= 0 ? +1 : -1; }

/// Finite label range {n_min, ..., n_max} of the two-sided number basis.
/// Both vacuum labels (0 and -1) are always inside the window, so every
/// window straddles the helicity boundary.
class TruncationWindow {
 public:
  /// Throws std::invalid_argument unless n_min <= -1 and n_max >= 0.
  TruncationWindow(int n_min, int n_max);

  int n_min() const noexcept { return n_min_; }
  int n_max() const noexcept { return n_max_; }
  int dimension() const noexcept { return n_max_ - n_min_ + 1; }
  bool contains(int label) const noexcept {
    return label >= n_min_ && label <= n_max_;
  }

  /// Matrix ordinal of a label: ordinal_of(n) = n - n_min.
  /// Throws std::out_of_range for labels outside the window.
  int ordinal_of(int label) const;

  /// Inverse of ordinal_of. Throws std::out_of_range for bad ordinals.
  int label_of(int ordinal) const;

  bool operator==(const TruncationWindow&) const = default;

 private:
  int n_min_;
  int n_max_;
};

inline TruncationWindow make_window(int n_min, int n_max) {
  return TruncationWindow(n_min, n_max);
}

/// Complex amplitude vector over a window's basis, indexed by mode label.
class KetVector {
 public:
  explicit KetVector(const TruncationWindow& window);
  KetVector(const TruncationWindow& window, Eigen::VectorXcd amplitudes);

  const TruncationWindow& window() const noexcept { return window_; }
  int dimension() const noexcept { return window_.dimension(); }

  Complex amp(int label) const { return amps_(window_.ordinal_of(label)); }
  void set_amp(int label, Complex value) {
    amps_(window_.ordinal_of(label)) = value;
  }

  const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }
  Eigen::VectorXcd& amplitudes() noexcept { return amps_; }

 private:
  TruncationWindow window_;
  Eigen::VectorXcd amps_;
};

/// One nonzero matrix element, addressed by mode labels (not ordinals).
struct MatrixEntry {
  int row;
  int col;
  Complex value;
};

/// Complex square matrix over a window's basis. Storage is dense below
/// dimension 256 and coordinate-sparse from 256 up; every operator built
/// here has O(dimension) nonzeros except the phase operator, which is
/// dense by nature and stays dense at any size.
class LinearOperator {
 public:
  static constexpr int kDenseLimit = 256;

  using Triplet = Eigen::Triplet<Complex>;

  static LinearOperator zero(const TruncationWindow& window);
  static LinearOperator identity(const TruncationWindow& window);

  /// Builds from ordinal-indexed triplets, picking storage by dimension.
  static LinearOperator from_triplets(const TruncationWindow& window,
                                      const std::vector<Triplet>& entries);

  /// Keeps the given matrix dense regardless of dimension.
  static LinearOperator from_dense(const TruncationWindow& window,
                                   Eigen::MatrixXcd matrix);

  const TruncationWindow& window() const noexcept { return window_; }
  int dimension() const noexcept { return window_.dimension(); }
  bool is_dense() const noexcept;

  /// Element addressed by mode labels. Throws out_of_range off-window.
  Complex entry(int row_label, int col_label) const;

  /// Materializes the full matrix (copies when sparse).
  Eigen::MatrixXcd dense() const;

  /// Stored nonzero elements with label addressing, sorted row-major.
  /// Exact zeros are skipped in both storage modes.
  std::vector<MatrixEntry> nonzeros() const;

  friend LinearOperator operator+(const LinearOperator& a,
                                  const LinearOperator& b);
  friend LinearOperator operator-(const LinearOperator& a,
                                  const LinearOperator& b);
  friend LinearOperator operator*(Complex scale, const LinearOperator& a);

  friend KetVector apply(const LinearOperator& m, const KetVector& v);
  friend LinearOperator compose(const LinearOperator& a,
                                const LinearOperator& b);
  friend LinearOperator adjoint(const LinearOperator& a);
  friend double max_abs(const LinearOperator& a);

 private:
  using Dense = Eigen::MatrixXcd;
  using Sparse = Eigen::SparseMatrix<Complex>;

  LinearOperator(const TruncationWindow& window,
                 std::variant<Dense, Sparse> storage);

  TruncationWindow window_;
  std::variant<Dense, Sparse> storage_;
};

/// Basis ket |n>: amplitude 1 at ordinal_of(n), 0 elsewhere.
KetVector basis_ket(int label, const TruncationWindow& window);

/// Inner product, conjugate-linear in the first argument.
/// Throws std::invalid_argument on window mismatch.
Complex inner(const KetVector& a, const KetVector& b);

double norm(const KetVector& a);

/// a scaled to unit norm; throws std::invalid_argument on the zero vector.
KetVector normalized(const KetVector& a);

KetVector apply(const LinearOperator& m, const KetVector& v);
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator adjoint(const LinearOperator& a);

/// commutator(A, B) = AB - BA.
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

/// Largest |entry|; max-norm residuals are measured with this.
double max_abs(const LinearOperator& a);

}  // namespace phasekit

#endif  // PHASEKIT_FOCK_SPACE_HPP
