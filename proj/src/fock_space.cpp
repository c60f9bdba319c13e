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

#include "phasekit/fock_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace phasekit {

namespace {

void require_same_window(const TruncationWindow& a, const TruncationWindow& b,
                         const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": window mismatch ([" +
                                std::to_string(a.n_min()) + "," +
                                std::to_string(a.n_max()) + "] vs [" +
                                std::to_string(b.n_min()) + "," +
                                std::to_string(b.n_max()) + "])");
  }
}

}  // namespace

TruncationWindow::TruncationWindow(int n_min, int n_max)
    : n_min_(n_min), n_max_(n_max) {
  if (n_min > -1 || n_max < 0) {
    throw std::invalid_argument(
        "invalid window [" + std::to_string(n_min) + "," +
        std::to_string(n_max) +
        "]: need n_min <= -1 and n_max >= 0 so both vacuum labels "
        "0 and -1 lie inside");
  }
}

int TruncationWindow::ordinal_of(int label) const {
  if (!contains(label)) {
    throw std::out_of_range("label " + std::to_string(label) +
                            " outside window [" + std::to_string(n_min_) +
                            "," + std::to_string(n_max_) + "]");
  }
  return label - n_min_;
}

int TruncationWindow::label_of(int ordinal) const {
  if (ordinal < 0 || ordinal >= dimension()) {
    throw std::out_of_range("ordinal " + std::to_string(ordinal) +
                            " outside window of dimension " +
                            std::to_string(dimension()));
  }
  return ordinal + n_min_;
}

KetVector::KetVector(const TruncationWindow& window)
    : window_(window), amps_(Eigen::VectorXcd::Zero(window.dimension())) {}

KetVector::KetVector(const TruncationWindow& window,
                     Eigen::VectorXcd amplitudes)
    : window_(window), amps_(std::move(amplitudes)) {
  if (amps_.size() != window_.dimension()) {
    throw std::invalid_argument(
        "amplitude vector length " + std::to_string(amps_.size()) +
        " does not match window dimension " +
        std::to_string(window_.dimension()));
  }
}

LinearOperator::LinearOperator(const TruncationWindow& window,
                               std::variant<Dense, Sparse> storage)
    : window_(window), storage_(std::move(storage)) {}

bool LinearOperator::is_dense() const noexcept {
  return std::holds_alternative<Dense>(storage_);
}

LinearOperator LinearOperator::zero(const TruncationWindow& window) {
  return from_triplets(window, {});
}

LinearOperator LinearOperator::identity(const TruncationWindow& window) {
  std::vector<Triplet> entries;
  entries.reserve(window.dimension());
  for (int i = 0; i < window.dimension(); ++i) {
    entries.emplace_back(i, i, Complex(1.0, 0.0));
  }
  return from_triplets(window, entries);
}

LinearOperator LinearOperator::from_triplets(
    const TruncationWindow& window, const std::vector<Triplet>& entries) {
  const int d = window.dimension();
  if (d < kDenseLimit) {
    Dense m = Dense::Zero(d, d);
    for (const auto& t : entries) {
      m(t.row(), t.col()) += t.value();
    }
    return LinearOperator(window, std::move(m));
  }
  Sparse m(d, d);
  m.setFromTriplets(entries.begin(), entries.end());
  m.makeCompressed();
  return LinearOperator(window, std::move(m));
}

LinearOperator LinearOperator::from_dense(const TruncationWindow& window,
                                          Eigen::MatrixXcd matrix) {
  if (matrix.rows() != window.dimension() ||
      matrix.cols() != window.dimension()) {
    throw std::invalid_argument("matrix shape does not match window");
  }
  return LinearOperator(window, std::move(matrix));
}

Complex LinearOperator::entry(int row_label, int col_label) const {
  const int i = window_.ordinal_of(row_label);
  const int j = window_.ordinal_of(col_label);
  if (const auto* d = std::get_if<Dense>(&storage_)) {
    return (*d)(i, j);
  }
  return std::get<Sparse>(storage_).coeff(i, j);
}

Eigen::MatrixXcd LinearOperator::dense() const {
  if (const auto* d = std::get_if<Dense>(&storage_)) {
    return *d;
  }
  return Eigen::MatrixXcd(std::get<Sparse>(storage_));
}

std::vector<MatrixEntry> LinearOperator::nonzeros() const {
  std::vector<MatrixEntry> out;
  const int n_min = window_.n_min();
  if (const auto* d = std::get_if<Dense>(&storage_)) {
    for (int i = 0; i < d->rows(); ++i) {
      for (int j = 0; j < d->cols(); ++j) {
        if ((*d)(i, j) != Complex(0.0, 0.0)) {
          out.push_back({i + n_min, j + n_min, (*d)(i, j)});
        }
      }
    }
    return out;
  }
  const auto& s = std::get<Sparse>(storage_);
  for (int k = 0; k < s.outerSize(); ++k) {
    for (Sparse::InnerIterator it(s, k); it; ++it) {
      if (it.value() != Complex(0.0, 0.0)) {
        out.push_back({static_cast<int>(it.row()) + n_min,
                       static_cast<int>(it.col()) + n_min, it.value()});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MatrixEntry& a,
                                       const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  require_same_window(a.window_, b.window_, "operator+");
  if (!a.is_dense() && !b.is_dense()) {
    LinearOperator::Sparse s = std::get<LinearOperator::Sparse>(a.storage_) +
                               std::get<LinearOperator::Sparse>(b.storage_);
    return LinearOperator(a.window_, std::move(s));
  }
  return LinearOperator(a.window_, LinearOperator::Dense(a.dense() +
                                                         b.dense()));
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  require_same_window(a.window_, b.window_, "operator-");
  if (!a.is_dense() && !b.is_dense()) {
    LinearOperator::Sparse s = std::get<LinearOperator::Sparse>(a.storage_) -
                               std::get<LinearOperator::Sparse>(b.storage_);
    return LinearOperator(a.window_, std::move(s));
  }
  return LinearOperator(a.window_, LinearOperator::Dense(a.dense() -
                                                         b.dense()));
}

LinearOperator operator*(Complex scale, const LinearOperator& a) {
  if (!a.is_dense()) {
    LinearOperator::Sparse s =
        scale * std::get<LinearOperator::Sparse>(a.storage_);
    return LinearOperator(a.window_, std::move(s));
  }
  return LinearOperator(a.window_, LinearOperator::Dense(scale * a.dense()));
}

KetVector basis_ket(int label, const TruncationWindow& window) {
  KetVector v(window);
  v.set_amp(label, Complex(1.0, 0.0));
  return v;
}

Complex inner(const KetVector& a, const KetVector& b) {
  require_same_window(a.window(), b.window(), "inner");
  return a.amplitudes().dot(b.amplitudes());  // Eigen dot conjugates the left
}

double norm(const KetVector& a) { return a.amplitudes().norm(); }

KetVector normalized(const KetVector& a) {
  const double n = norm(a);
  if (n == 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  return KetVector(a.window(), a.amplitudes() / n);
}

KetVector apply(const LinearOperator& m, const KetVector& v) {
  require_same_window(m.window(), v.window(), "apply");
  if (m.is_dense()) {
    return KetVector(v.window(),
                     std::get<LinearOperator::Dense>(m.storage_) *
                         v.amplitudes());
  }
  return KetVector(v.window(), std::get<LinearOperator::Sparse>(m.storage_) *
                                   v.amplitudes());
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  require_same_window(a.window(), b.window(), "compose");
  if (!a.is_dense() && !b.is_dense()) {
    LinearOperator::Sparse s =
        (std::get<LinearOperator::Sparse>(a.storage_) *
         std::get<LinearOperator::Sparse>(b.storage_))
            .pruned();
    return LinearOperator(a.window_, std::move(s));
  }
  return LinearOperator(a.window_,
                        LinearOperator::Dense(a.dense() * b.dense()));
}

LinearOperator adjoint(const LinearOperator& a) {
  if (!a.is_dense()) {
    LinearOperator::Sparse s =
        std::get<LinearOperator::Sparse>(a.storage_).adjoint();
    return LinearOperator(a.window_, std::move(s));
  }
  return LinearOperator(a.window_,
                        LinearOperator::Dense(a.dense().adjoint()));
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  return compose(a, b) - compose(b, a);
}

double max_abs(const LinearOperator& a) {
  if (a.is_dense()) {
    const auto& d = std::get<LinearOperator::Dense>(a.storage_);
    return d.size() == 0 ? 0.0 : d.cwiseAbs().maxCoeff();
  }
  const auto& s = std::get<LinearOperator::Sparse>(a.storage_);
  double best = 0.0;
  for (int k = 0; k < s.outerSize(); ++k) {
    for (LinearOperator::Sparse::InnerIterator it(s, k); it; ++it) {
      best = std::max(best, std::abs(it.value()));
    }
  }
  return best;
}

}  // namespace phasekit
