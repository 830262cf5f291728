// Copyright 2026 The qpc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPC_STATES_HPP
#define QPC_STATES_HPP

#include "qpc/linops.hpp"

namespace qpc {

// Composite index convention for H1 (x) H2: i = i1 * d2 + i2.

/// Normalized pure state on H1 (x) H2.
class PureState {
 public:
  /// Rejects a length other than d1*d2, non-finite entries, and norms
  /// further than `tol.norm` from one.
  PureState(Eigen::Index d1, Eigen::Index d2, ComplexVector amplitudes, const Tolerances& tol = default_tolerances());

  Eigen::Index d1() const noexcept { return d1_; }
  Eigen::Index d2() const noexcept { return d2_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

  /// |psi><psi|
  ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  Eigen::Index d1_;
  Eigen::Index d2_;
  ComplexVector amplitudes_;
};

/// Bipartite mixed state. Construction checks hermiticity, unit trace and
/// positivity against the supplied tolerances; an instance that exists is
/// valid.
class DensityMatrix {
 public:
  DensityMatrix(Eigen::Index d1, Eigen::Index d2, ComplexMatrix matrix, const Tolerances& tol = default_tolerances());

  static DensityMatrix from_pure(const PureState& psi);

  Eigen::Index d1() const noexcept { return d1_; }
  Eigen::Index d2() const noexcept { return d2_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  Eigen::Index d1_;
  Eigen::Index d2_;
  ComplexMatrix matrix_;
};

/// Tr_2 X: result(a,b) = sum_c X(a*d2+c, b*d2+c). X need not be hermitian.
ComplexMatrix partial_trace_over_2(const ComplexMatrix& x, Eigen::Index d1, Eigen::Index d2);
/// Tr_1 X: result(c,e) = sum_a X(a*d2+c, a*d2+e).
ComplexMatrix partial_trace_over_1(const ComplexMatrix& x, Eigen::Index d1, Eigen::Index d2);
/// Partial transpose over subsystem 2.
ComplexMatrix partial_transpose_over_2(const ComplexMatrix& x, Eigen::Index d1, Eigen::Index d2);

/// Smallest eigenvalue of a hermitian matrix.
double min_eigenvalue(const ComplexMatrix& m, const Tolerances& tol = default_tolerances());

/// -sum mu ln mu over eigenvalues above `tol.entropy_cutoff`, in nats.
double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// Tr rho^2.
double purity(const DensityMatrix& rho);

/// The one-parameter family of 3x3 states with positive partial transpose,
/// beta = (1+a)/2, gamma = sqrt(1-a^2)/2, normalized by 1/(1+8a).
/// Rejects a outside [0, 1].
DensityMatrix horodecki_state(double a);

/// (|00> + |11>)/sqrt(2).
PureState bell_state();

/// p |Bell><Bell| + (1-p) 1/4. Rejects p outside [0, 1].
DensityMatrix werner_state(double p);

/// Exact two-qubit concurrence, max(0, l1 - l2 - l3 - l4) where l_i are the
/// descending square roots of the eigenvalues of rho (sy(x)sy) rho* (sy(x)sy).
/// Rejects anything but a 2x2 state.
double wootters_concurrence_2qubit(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// Haar-random unit vector of dimension d (normalized complex Gaussian).
ComplexVector random_pure_state(Eigen::Index d, Rng& rng);

/// Mixture of `rank` Haar-random pure states with flat-Dirichlet weights.
DensityMatrix random_density_matrix(Eigen::Index d1, Eigen::Index d2, Eigen::Index rank, Rng& rng);

}  // namespace qpc

#endif  // QPC_STATES_HPP
