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

#ifndef PHASEKIT_OPERATORS_HPP
#define PHASEKIT_OPERATORS_HPP

#include "phasekit/fock_space.hpp"

namespace phasekit {

/// How the doubly-infinite ladder is cut at the window boundary.
/// Open: the lowering operator annihilates |n_min> (one defective column,
/// ladder action elsewhere untouched). Cyclic: |n_min> wraps to |n_max>,
/// making the lowering operator an exact permutation, hence unitary.
enum class BoundaryMode { Open, Cyclic };

/// Helicity operator: diagonal, +1 on labels n >= 0, -1 on n <= -1.
/// Squares to the identity.
LinearOperator helicity(const TruncationWindow& window);

/// Polarization projector (I + sign*P)/2 for sign = +1 or -1.
/// Throws std::invalid_argument for any other sign.
LinearOperator projector(int sign, const TruncationWindow& window);

/// Rank-one vacuum bridge |-1><0|: swaps the two vacua under
/// bridge / adjoint(bridge), annihilates every other basis state.
LinearOperator bridge(const TruncationWindow& window);

/// Lowering operator over the whole window:
///   |n> -> sqrt(n) |n-1>     for n >= 1,
///   |0> -> |-1>              (vacuum bridge),
///   |n> -> sqrt(|n|) |n-1>   for n <= -1,
/// with |n_min> -> 0 at the open truncation edge.
LinearOperator annihilation_modified(const TruncationWindow& window);

/// Adjoint of annihilation_modified, built directly:
///   |n> -> sqrt(n+1) |n+1> for n >= 0, |-1> -> |0>,
///   |n> -> sqrt(|n+1|) |n+1> for n <= -2, |n_max> -> 0.
LinearOperator creation_modified(const TruncationWindow& window);

/// Number operator: diagonal with eigenvalue n on |n>, negative labels
/// included (the signed label is the eigenvalue).
LinearOperator number_modified(const TruncationWindow& window);

/// Unit-shift ladder operator E: E|n> = |n-1> for every n > n_min.
/// Cyclic mode closes the ladder with E|n_min> = |n_max| wrap, giving an
/// exact permutation matrix; Open mode zeroes that column.
LinearOperator susskind_glogower(const TruncationWindow& window,
                                 BoundaryMode mode);

/// Hermitian phase operator -i log E of the cyclic ladder shift, built by
/// spectral decomposition with eigenphases on the (-pi, pi] branch.
LinearOperator phase_operator(const TruncationWindow& window);

/// Same, with the boundary mode spelled out; Open mode is rejected
/// (a non-unitary shift has no Hermitian logarithm).
LinearOperator phase_operator(const TruncationWindow& window,
                              BoundaryMode mode);

/// exp(i*H) for Hermitian H via its eigendecomposition. Inverse route of
/// phase_operator: exp(i * phase_operator(w)) recovers the cyclic shift.
LinearOperator unitary_exp_i(const LinearOperator& hermitian);

}  // namespace phasekit

#endif  // PHASEKIT_OPERATORS_HPP
