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

#ifndef QPC_LINOPS_HPP
#define QPC_LINOPS_HPP

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "qpc/tolerances.hpp"

namespace qpc {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Seeded generator used throughout; always passed explicitly.
using Rng = std::mt19937_64;

/// Eigenpairs of a hermitian matrix, values descending, vectors as columns.
struct EigenSystem {
  RealVector values;
  ComplexMatrix vectors;
};

/// Largest entry of |M - M^dagger|. M must be square.
double hermiticity_violation(const ComplexMatrix& m);
/// Largest entry of |M - M^T|. M must be square.
double symmetry_violation(const ComplexMatrix& m);

/// Throws Error(NotFinite) if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);

/// Hermitian eigendecomposition with deterministic output.
///
/// Eigenvalues are returned in descending order. Each eigenvector is rephased
/// so its first entry of magnitude above `tol.phase_fix` is real positive.
/// Within a group of eigenvalues tied to `tol.degenerate`, vectors are
/// ordered lexicographically (descending, real part before imaginary part).
/// Rejects non-square, non-finite, or non-hermitian input; the error carries
/// the hermiticity violation.
EigenSystem hermitian_eigendecomposition(const ComplexMatrix& m, const Tolerances& tol = default_tolerances());

/// Singular values of a complex symmetric matrix, descending.
/// Rejects input with max |tau - tau^T| above `tol.symmetry`.
RealVector symmetric_singular_values(const ComplexMatrix& tau, const Tolerances& tol = default_tolerances());

/// exp(i H t) for hermitian H, by eigendecomposition.
ComplexMatrix matrix_exponential_unitary(const ComplexMatrix& h, double t, const Tolerances& tol = default_tolerances());

/// exp(i H t) for many t from a single diagonalization of H.
class UnitaryPropagator {
 public:
  explicit UnitaryPropagator(const ComplexMatrix& h, const Tolerances& tol = default_tolerances());

  ComplexMatrix at(double t) const;
  const EigenSystem& spectrum() const noexcept { return eig_; }
  Eigen::Index dim() const noexcept { return eig_.values.size(); }

 private:
  EigenSystem eig_;
};

/// Kronecker product: (A (x) B)(i*rB + k, j*cB + l) = A(i,j) B(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Haar-distributed n x n unitary (QR of a complex Ginibre matrix with the
/// diagonal phases of R divided out).
ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng);

/// First `cols` columns of a Haar unitary of size `rows`; V^dagger V = 1.
ComplexMatrix haar_left_unitary(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Matrix of i.i.d. complex standard Gaussians, E|z|^2 = 1.
ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

}  // namespace qpc

#endif  // QPC_LINOPS_HPP
