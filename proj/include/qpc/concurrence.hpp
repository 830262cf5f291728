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

#ifndef QPC_CONCURRENCE_HPP
#define QPC_CONCURRENCE_HPP

#include <variant>
#include <vector>

#include "qpc/states.hpp"

namespace qpc {

/// Concurrence of a possibly subnormalized vector on H1 (x) H2 from the
/// four-term form sqrt(Tr P^2 - Tr rho1^2 - Tr rho2^2 + (Tr P)^2), P = |psi><psi|.
double pure_concurrence(const ComplexVector& psi, Eigen::Index d1, Eigen::Index d2,
                        const Tolerances& tol = default_tolerances());
inline double pure_concurrence(const PureState& psi, const Tolerances& tol = default_tolerances()) {
  return pure_concurrence(psi.amplitudes(), psi.d1(), psi.d2(), tol);
}

enum class Subsystem { First, Second };

/// sqrt(2 (<psi|psi>^2 - Tr rho_r^2)) with rho_r the reduced state on `keep`.
double pure_concurrence_reduced(const ComplexVector& psi, Eigen::Index d1, Eigen::Index d2,
                                Subsystem keep = Subsystem::First, const Tolerances& tol = default_tolerances());

/// Eigenvalues mu_1 >= mu_2 >= ... above the cutoff and their eigenvectors
/// (columns of `phi`). Discarded weight is kept in `truncated_weight`; the
/// retained mu are not renormalized.
struct SpectralEnsemble {
  Eigen::Index d1 = 0;
  Eigen::Index d2 = 0;
  RealVector mu;
  ComplexMatrix phi;
  double truncated_weight = 0.0;

  Eigen::Index rank() const noexcept { return mu.size(); }
};

SpectralEnsemble spectral_ensemble(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// Rank-4 tensor A_jk^lm stored as the n^2 x n^2 matrix with row j*n+k and
/// column l*n+m. Hermitian positive semidefinite as a matrix.
struct ConcurrenceTensor {
  Eigen::Index n = 0;
  ComplexMatrix flat;

  cplx operator()(Eigen::Index j, Eigen::Index k, Eigen::Index l, Eigen::Index m) const {
    return flat(j * n + k, l * n + m);
  }
};

ConcurrenceTensor build_concurrence_tensor(const SpectralEnsemble& e);

/// Complex symmetric n x n matrix tau_jk = A_jk^11 / sqrt(A_11^11).
struct TauMatrix {
  ComplexMatrix tau;
};

/// Returned instead of a tau matrix when A_11^11 falls below the separability
/// threshold, i.e. the dominant eigenvector is a product state.
struct SeparableDominant {
  double a1111 = 0.0;
};

using TauOutcome = std::variant<TauMatrix, SeparableDominant>;

TauOutcome build_tau(const ConcurrenceTensor& a, const Tolerances& tol = default_tolerances());

/// Same tau as build_tau(build_concurrence_tensor(e)) but only the n^2
/// entries A_jk^11 are formed.
TauOutcome tau_from_ensemble(const SpectralEnsemble& e, const Tolerances& tol = default_tolerances());

struct QpaResult {
  double value = 0.0;
  RealVector lambdas;  // singular values of tau, descending
  double dominant_weight = 0.0;
  bool separable_dominant = false;
  bool dominant_degenerate = false;
  double truncated_weight = 0.0;
};

/// Quasi-pure approximation max(l1 - sum_{i>1} l_i, 0) over the singular
/// values of tau. A lower bound on the concurrence of any state, exact for
/// pure states.
QpaResult qp_concurrence(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());
QpaResult qp_concurrence(const SpectralEnsemble& e, const Tolerances& tol = default_tolerances());

/// An ensemble written as its subnormalized members sqrt(p_i)|Psi_i>.
struct PureDecomposition {
  ComplexMatrix vectors;  // column i is sqrt(p_i)|Psi_i>
  RealVector weights;     // p_i

  /// sum_i vectors_i vectors_i^dagger
  ComplexMatrix reconstruct() const { return vectors * vectors.adjoint(); }
};

/// Throws Error(NotLeftUnitary) if max |V^dagger V - 1| exceeds the tolerance
/// and Error(Dimension) if V has fewer rows than columns.
void require_left_unitary(const ComplexMatrix& v, const Tolerances& tol = default_tolerances());

/// sqrt(p_i)|Psi_i> = sum_j V_ij sqrt(mu_j)|Phi_j> for an N x n left-unitary V.
PureDecomposition ensemble_from_left_unitary(const SpectralEnsemble& e, const ComplexMatrix& v,
                                             const Tolerances& tol = default_tolerances());

/// sum_i sqrt([V(x)V A V^dagger(x)V^dagger]_ii^ii), the average concurrence of
/// the ensemble selected by V.
double convex_roof_objective(const ConcurrenceTensor& a, const ComplexMatrix& v,
                             const Tolerances& tol = default_tolerances());

/// Complex symmetric T^alpha with A_jk^lm = sum_alpha T^alpha_jk conj(T^alpha_lm).
std::vector<ComplexMatrix> decompose_tensor(const ConcurrenceTensor& a, const Tolerances& tol = default_tolerances());

struct MembershipCheck {
  bool member = false;
  bool degenerate = false;  // every T^alpha_11 vanishes
  double residual = 0.0;    // max |sum_alpha z_alpha T^alpha - tau|
  double z_norm_squared = 0.0;
};

/// Checks that tau equals sum_alpha z_alpha T^alpha with
/// z_alpha = conj(T^alpha_11) / sqrt(sum_beta |T^beta_11|^2).
MembershipCheck verify_tau_membership(const ConcurrenceTensor& a, const TauMatrix& tau,
                                      const Tolerances& tol = default_tolerances());

}  // namespace qpc

#endif  // QPC_CONCURRENCE_HPP
