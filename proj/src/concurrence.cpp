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

#include "qpc/concurrence.hpp"

#include <cmath>
#include <string>

#include "qpc/errors.hpp"
#include "qpc/kernels.hpp"

namespace qpc {
namespace {

// Radicands below are analytically non-negative. Rounding noise down to
// -radicand_clamp is mapped to zero; anything more negative is a broken input.
double clamped_sqrt(double x, const Tolerances& tol) {
  if (x > 0.0) return std::sqrt(x);
  if (x < -tol.radicand_clamp) {
    throw Error(ErrorKind::NotPositive, "negative radicand " + std::to_string(x), -x);
  }
  return 0.0;
}

void require_vector_dims(const ComplexVector& psi, Eigen::Index d1, Eigen::Index d2) {
  if (d1 < 1 || d2 < 1 || psi.size() != d1 * d2) {
    throw Error(ErrorKind::Dimension, "vector of length " + std::to_string(psi.size()) + " does not match dims (" +
                                          std::to_string(d1) + ", " + std::to_string(d2) + ")");
  }
  require_finite(psi, "state vector");
}

// Column j of `phi`, scaled by sqrt(mu_j), viewed as a d1 x d2 matrix M_j with
// M_j(a, c) = psi(a*d2 + c). With that layout Tr_2 |psi_j><psi_l| = M_j M_l^dagger.
ComplexMatrix coefficient_matrix(const ComplexVector& psi, Eigen::Index d1, Eigen::Index d2) {
  ComplexMatrix m(d1, d2);
  for (Eigen::Index a = 0; a < d1; ++a) {
    for (Eigen::Index c = 0; c < d2; ++c) m(a, c) = psi(a * d2 + c);
  }
  return m;
}

// The ingredients the tensor entries are assembled from, for weighted
// vectors psi_j = sqrt(mu_j) Phi_j:
//   overlap(l, k)      = <psi_l|psi_k>
//   reduced[j*n + l]   = vec(M_j M_l^dagger)            (Tr_2 |psi_j><psi_l|)
//   reduced_t[j*n + l] = vec((M_j M_l^dagger)^T)
// so that Tr(X Y) = dotu(vec X, vec Y^T).
struct TensorFactors {
  Eigen::Index n = 0;
  ComplexMatrix overlap;
  ComplexMatrix reduced;
  ComplexMatrix reduced_t;

  cplx trace_product(Eigen::Index x, Eigen::Index y) const {
    return kernels::dotu({reduced.col(x).data(), static_cast<std::size_t>(reduced.rows())},
                         {reduced_t.col(y).data(), static_cast<std::size_t>(reduced_t.rows())});
  }

  // The four bracketed terms, prefactor absorbed into psi_j.
  cplx entry(Eigen::Index j, Eigen::Index k, Eigen::Index l, Eigen::Index m) const {
    const cplx full = overlap(l, k) * overlap(m, j);
    const cplx over_2 = trace_product(j * n + l, k * n + m);
    const cplx over_1 = trace_product(j * n + m, k * n + l);
    const cplx product = overlap(l, j) * overlap(m, k);
    return full - over_2 - over_1 + product;
  }
};

// Builds the factors; when `only_first` is set, only the pairs (j, 0) needed
// for A_jk^11 are formed.
TensorFactors make_factors(const SpectralEnsemble& e, bool only_first) {
  TensorFactors f;
  const Eigen::Index n = e.rank();
  f.n = n;
  std::vector<ComplexMatrix> coeff;
  coeff.reserve(static_cast<std::size_t>(n));
  ComplexMatrix weighted(e.phi.rows(), n);
  for (Eigen::Index j = 0; j < n; ++j) {
    weighted.col(j) = std::sqrt(e.mu(j)) * e.phi.col(j);
    coeff.push_back(coefficient_matrix(weighted.col(j), e.d1, e.d2));
  }
  f.overlap = weighted.adjoint() * weighted;

  const Eigen::Index block = e.d1 * e.d1;
  f.reduced = ComplexMatrix::Zero(block, n * n);
  f.reduced_t = ComplexMatrix::Zero(block, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = 0; l < n; ++l) {
      if (only_first && l != 0) continue;
      const ComplexMatrix p = coeff[static_cast<std::size_t>(j)] * coeff[static_cast<std::size_t>(l)].adjoint();
      const ComplexMatrix pt = p.transpose();
      f.reduced.col(j * n + l) = Eigen::Map<const ComplexVector>(p.data(), block);
      f.reduced_t.col(j * n + l) = Eigen::Map<const ComplexVector>(pt.data(), block);
    }
  }
  return f;
}

TauOutcome tau_from_entries(Eigen::Index n, double a1111, const auto& entry_jk11, const Tolerances& tol) {
  if (a1111 < tol.separable_dominant) return SeparableDominant{a1111};
  const double norm = std::sqrt(a1111);
  TauMatrix out{ComplexMatrix(n, n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j; k < n; ++k) {
      out.tau(j, k) = entry_jk11(j, k) / norm;
      out.tau(k, j) = out.tau(j, k);
    }
  }
  return out;
}

}  // namespace

double pure_concurrence(const ComplexVector& psi, Eigen::Index d1, Eigen::Index d2, const Tolerances& tol) {
  require_vector_dims(psi, d1, d2);
  const ComplexMatrix p = psi * psi.adjoint();
  const double tr_p = p.trace().real();
  const double tr_p2 = (p * p).trace().real();
  const ComplexMatrix rho1 = partial_trace_over_2(p, d1, d2);
  const ComplexMatrix rho2 = partial_trace_over_1(p, d1, d2);
  const double radicand = tr_p2 - rho1.squaredNorm() - rho2.squaredNorm() + tr_p * tr_p;
  return clamped_sqrt(radicand, tol);
}

double pure_concurrence_reduced(const ComplexVector& psi, Eigen::Index d1, Eigen::Index d2, Subsystem keep,
                                const Tolerances& tol) {
  require_vector_dims(psi, d1, d2);
  const ComplexMatrix p = psi * psi.adjoint();
  const ComplexMatrix rho_r = keep == Subsystem::First ? partial_trace_over_2(p, d1, d2) : partial_trace_over_1(p, d1, d2);
  const double norm2 = psi.squaredNorm();
  // Tr rho_r^2 for hermitian rho_r.
  return clamped_sqrt(2.0 * (norm2 * norm2 - rho_r.squaredNorm()), tol);
}

SpectralEnsemble spectral_ensemble(const DensityMatrix& rho, const Tolerances& tol) {
  const EigenSystem es = hermitian_eigendecomposition(rho.matrix(), tol);
  Eigen::Index kept = 0;
  while (kept < es.values.size() && es.values(kept) > tol.spectral_cutoff) ++kept;

  SpectralEnsemble e;
  e.d1 = rho.d1();
  e.d2 = rho.d2();
  e.mu = es.values.head(kept);
  e.phi = es.vectors.leftCols(kept);
  e.truncated_weight = es.values.tail(es.values.size() - kept).sum();
  return e;
}

ConcurrenceTensor build_concurrence_tensor(const SpectralEnsemble& e) {
  const TensorFactors f = make_factors(e, false);
  const Eigen::Index n = e.rank();
  ConcurrenceTensor a{n, ComplexMatrix(n * n, n * n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index m = 0; m < n; ++m) a.flat(j * n + k, l * n + m) = f.entry(j, k, l, m);
      }
    }
  }
  return a;
}

TauOutcome build_tau(const ConcurrenceTensor& a, const Tolerances& tol) {
  if (a.n == 0) return SeparableDominant{0.0};
  return tau_from_entries(
      a.n, a(0, 0, 0, 0).real(), [&](Eigen::Index j, Eigen::Index k) { return a(j, k, 0, 0); }, tol);
}

TauOutcome tau_from_ensemble(const SpectralEnsemble& e, const Tolerances& tol) {
  if (e.rank() == 0) return SeparableDominant{0.0};
  const TensorFactors f = make_factors(e, true);
  return tau_from_entries(
      e.rank(), f.entry(0, 0, 0, 0).real(), [&](Eigen::Index j, Eigen::Index k) { return f.entry(j, k, 0, 0); }, tol);
}

QpaResult qp_concurrence(const SpectralEnsemble& e, const Tolerances& tol) {
  QpaResult r;
  r.truncated_weight = e.truncated_weight;
  if (e.rank() == 0) {
    r.separable_dominant = true;
    return r;
  }
  r.dominant_weight = e.mu(0);
  r.dominant_degenerate = e.rank() > 1 && e.mu(0) - e.mu(1) <= tol.degenerate;

  const TauOutcome outcome = tau_from_ensemble(e, tol);
  if (std::holds_alternative<SeparableDominant>(outcome)) {
    r.separable_dominant = true;
    return r;
  }
  r.lambdas = symmetric_singular_values(std::get<TauMatrix>(outcome).tau, tol);
  const double c = r.lambdas(0) - r.lambdas.tail(r.lambdas.size() - 1).sum();
  r.value = c > 0.0 ? c : 0.0;
  return r;
}

QpaResult qp_concurrence(const DensityMatrix& rho, const Tolerances& tol) {
  return qp_concurrence(spectral_ensemble(rho, tol), tol);
}

void require_left_unitary(const ComplexMatrix& v, const Tolerances& tol) {
  if (v.rows() < v.cols()) {
    throw Error(ErrorKind::Dimension, "left-unitary matrix needs rows >= cols, got " + std::to_string(v.rows()) + "x" +
                                          std::to_string(v.cols()));
  }
  require_finite(v, "left-unitary matrix");
  const ComplexMatrix gram = v.adjoint() * v;
  const double dev =
      v.cols() == 0 ? 0.0 : (gram - ComplexMatrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
  if (dev > tol.left_unitary) {
    throw Error(ErrorKind::NotLeftUnitary, "max |V^dagger V - 1| = " + std::to_string(dev), dev);
  }
}

PureDecomposition ensemble_from_left_unitary(const SpectralEnsemble& e, const ComplexMatrix& v, const Tolerances& tol) {
  if (v.cols() != e.rank()) {
    throw Error(ErrorKind::Dimension, "V has " + std::to_string(v.cols()) + " columns, ensemble rank is " +
                                          std::to_string(e.rank()));
  }
  require_left_unitary(v, tol);
  PureDecomposition d;
  const ComplexVector root_mu = e.mu.cwiseSqrt().cast<cplx>();
  d.vectors = e.phi * root_mu.asDiagonal() * v.transpose();
  d.weights = d.vectors.colwise().squaredNorm().transpose();
  return d;
}

double convex_roof_objective(const ConcurrenceTensor& a, const ComplexMatrix& v, const Tolerances& tol) {
  if (v.cols() != a.n) {
    throw Error(ErrorKind::Dimension, "V has " + std::to_string(v.cols()) + " columns, tensor rank is " +
                                          std::to_string(a.n));
  }
  require_left_unitary(v, tol);
  const Eigen::Index n = a.n;
  const auto m = static_cast<std::size_t>(n * n);
  const std::span<const cplx> flat(a.flat.data(), m * m);
  ComplexVector y(n * n);
  double total = 0.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) y(j * n + k) = v(i, j) * v(i, k);
    }
    total += clamped_sqrt(kernels::quadratic_form(flat, {y.data(), m}), tol);
  }
  return total;
}

std::vector<ComplexMatrix> decompose_tensor(const ConcurrenceTensor& a, const Tolerances& tol) {
  const Eigen::Index n = a.n;
  std::vector<ComplexMatrix> out;
  if (n == 0) return out;
  const EigenSystem es = hermitian_eigendecomposition(a.flat, tol);
  for (Eigen::Index alpha = 0; alpha < es.values.size(); ++alpha) {
    const double w = es.values(alpha);
    if (w <= tol.decomposition_cutoff) break;
    ComplexMatrix t(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) t(j, k) = std::sqrt(w) * es.vectors(j * n + k, alpha);
    }
    out.push_back(0.5 * (t + t.transpose()));
  }
  return out;
}

MembershipCheck verify_tau_membership(const ConcurrenceTensor& a, const TauMatrix& tau, const Tolerances& tol) {
  MembershipCheck check;
  const std::vector<ComplexMatrix> terms = decompose_tensor(a, tol);
  double weight = 0.0;
  for (const ComplexMatrix& t : terms) weight += std::norm(t(0, 0));
  if (weight < tol.separable_dominant) {
    check.degenerate = true;
    return check;
  }
  const double scale = std::sqrt(weight);
  ComplexMatrix combined = ComplexMatrix::Zero(a.n, a.n);
  double z_norm = 0.0;
  for (const ComplexMatrix& t : terms) {
    const cplx z = std::conj(t(0, 0)) / scale;
    z_norm += std::norm(z);
    combined += z * t;
  }
  check.z_norm_squared = z_norm;
  check.residual = (combined - tau.tau).cwiseAbs().maxCoeff();
  check.member = check.residual <= tol.membership;
  return check;
}

}  // namespace qpc
