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

#include "qpc/states.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qpc/errors.hpp"

namespace qpc {
namespace {

void require_bipartite(const ComplexMatrix& x, Eigen::Index d1, Eigen::Index d2, const char* what) {
  if (d1 < 1 || d2 < 1 || x.rows() != d1 * d2 || x.cols() != d1 * d2) {
    throw Error(ErrorKind::Dimension, std::string(what) + ": expected " + std::to_string(d1 * d2) + "x" +
                                          std::to_string(d1 * d2) + " for dims (" + std::to_string(d1) + ", " +
                                          std::to_string(d2) + "), got " + std::to_string(x.rows()) + "x" +
                                          std::to_string(x.cols()));
  }
}

}  // namespace

PureState::PureState(Eigen::Index d1, Eigen::Index d2, ComplexVector amplitudes, const Tolerances& tol)
    : d1_(d1), d2_(d2), amplitudes_(std::move(amplitudes)) {
  if (d1 < 1 || d2 < 1 || amplitudes_.size() != d1 * d2) {
    throw Error(ErrorKind::Dimension, "pure state needs " + std::to_string(d1 * d2) + " amplitudes, got " +
                                          std::to_string(amplitudes_.size()));
  }
  require_finite(amplitudes_, "pure state");
  const double deviation = std::abs(amplitudes_.norm() - 1.0);
  if (deviation > tol.norm) {
    throw Error(ErrorKind::NotNormalized, "| ||psi|| - 1 | = " + std::to_string(deviation), deviation);
  }
}

DensityMatrix::DensityMatrix(Eigen::Index d1, Eigen::Index d2, ComplexMatrix matrix, const Tolerances& tol)
    : d1_(d1), d2_(d2), matrix_(std::move(matrix)) {
  require_bipartite(matrix_, d1, d2, "density matrix");
  require_finite(matrix_, "density matrix");
  const double herm = hermiticity_violation(matrix_);
  if (herm > tol.hermiticity) {
    throw Error(ErrorKind::NotHermitian, "max |rho - rho^dagger| = " + std::to_string(herm), herm);
  }
  const double trace_dev = std::abs(matrix_.trace() - cplx(1.0, 0.0));
  if (trace_dev > tol.trace) {
    throw Error(ErrorKind::Trace, "|Tr rho - 1| = " + std::to_string(trace_dev), trace_dev);
  }
  const double lowest = min_eigenvalue(matrix_, tol);
  if (lowest < -tol.psd) {
    throw Error(ErrorKind::NotPositive, "smallest eigenvalue " + std::to_string(lowest), -lowest);
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.d1(), psi.d2(), psi.projector());
}

ComplexMatrix partial_trace_over_2(const ComplexMatrix& x, Eigen::Index d1, Eigen::Index d2) {
  require_bipartite(x, d1, d2, "partial_trace_over_2");
  ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
  for (Eigen::Index a = 0; a < d1; ++a) {
    for (Eigen::Index b = 0; b < d1; ++b) {
      out(a, b) = x.block(a * d2, b * d2, d2, d2).trace();
    }
  }
  return out;
}

ComplexMatrix partial_trace_over_1(const ComplexMatrix& x, Eigen::Index d1, Eigen::Index d2) {
  require_bipartite(x, d1, d2, "partial_trace_over_1");
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (Eigen::Index a = 0; a < d1; ++a) out += x.block(a * d2, a * d2, d2, d2);
  return out;
}

ComplexMatrix partial_transpose_over_2(const ComplexMatrix& x, Eigen::Index d1, Eigen::Index d2) {
  require_bipartite(x, d1, d2, "partial_transpose_over_2");
  ComplexMatrix out(x.rows(), x.cols());
  for (Eigen::Index a = 0; a < d1; ++a) {
    for (Eigen::Index b = 0; b < d1; ++b) {
      out.block(a * d2, b * d2, d2, d2) = x.block(a * d2, b * d2, d2, d2).transpose();
    }
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m, const Tolerances& tol) {
  const double herm = hermiticity_violation(m);
  if (herm > tol.hermiticity) {
    throw Error(ErrorKind::NotHermitian, "max |M - M^dagger| = " + std::to_string(herm), herm);
  }
  if (m.size() == 0) return 0.0;
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
  const ComplexMatrix sym = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double mu : solver.eigenvalues()) {
    if (mu > tol.entropy_cutoff) s -= mu * std::log(mu);
  }
  return s < 0.0 ? 0.0 : s;
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for hermitian rho.
  return rho.matrix().squaredNorm();
}

DensityMatrix horodecki_state(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw Error(ErrorKind::Domain, "horodecki_state needs a in [0, 1], got " + std::to_string(a));
  const double beta = (1.0 + a) / 2.0;
  const double gamma = std::sqrt(1.0 - a * a) / 2.0;

  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  for (Eigen::Index i = 0; i < 9; ++i) m(i, i) = a;
  // Coherences among |00>, |11>, |22> (indices 0, 4, 8).
  for (Eigen::Index i : {0, 4, 8}) {
    for (Eigen::Index j : {0, 4, 8}) m(i, j) = a;
  }
  m(6, 6) = beta;
  m(8, 8) = beta;
  m(6, 8) = gamma;
  m(8, 6) = gamma;
  m /= (1.0 + 8.0 * a);
  return DensityMatrix(3, 3, std::move(m));
}

PureState bell_state() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return PureState(2, 2, std::move(v));
}

DensityMatrix werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::Domain, "werner_state needs p in [0, 1], got " + std::to_string(p));
  ComplexMatrix m = p * bell_state().projector() + (1.0 - p) / 4.0 * ComplexMatrix::Identity(4, 4);
  return DensityMatrix(2, 2, std::move(m));
}

double wootters_concurrence_2qubit(const DensityMatrix& rho, const Tolerances& tol) {
  if (rho.d1() != 2 || rho.d2() != 2) {
    throw Error(ErrorKind::Dimension, "wootters_concurrence_2qubit needs a 2x2 state, got (" + std::to_string(rho.d1()) +
                                          ", " + std::to_string(rho.d2()) + ")");
  }
  ComplexMatrix flip = ComplexMatrix::Zero(4, 4);
  flip(0, 3) = flip(3, 0) = -1.0;
  flip(1, 2) = flip(2, 1) = 1.0;
  // The square roots of the eigenvalues of rho (sy(x)sy) rho* (sy(x)sy) are the
  // singular values of X^T (sy(x)sy) X with rho = X X^dagger. Taking them from
  // an SVD avoids the square root of rounding noise in zero eigenvalues.
  const EigenSystem es = hermitian_eigendecomposition(rho.matrix(), tol);
  const RealVector root = es.values.cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix x = es.vectors * root.cast<cplx>().asDiagonal();
  const ComplexMatrix w = x.transpose() * flip * x;
  Eigen::JacobiSVD<ComplexMatrix> svd(w);
  const RealVector& lambda = svd.singularValues();  // descending
  const double c = lambda(0) - lambda(1) - lambda(2) - lambda(3);
  return c > 0.0 ? c : 0.0;
}

ComplexVector random_pure_state(Eigen::Index d, Rng& rng) {
  ComplexVector v = complex_gaussian(d, 1, rng).col(0);
  return v / v.norm();
}

DensityMatrix random_density_matrix(Eigen::Index d1, Eigen::Index d2, Eigen::Index rank, Rng& rng) {
  if (rank < 1) throw Error(ErrorKind::Domain, "random_density_matrix needs rank >= 1");
  std::exponential_distribution<double> exponential(1.0);
  const Eigen::Index d = d1 * d2;
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  double total = 0.0;
  std::vector<double> weights(static_cast<std::size_t>(rank));
  for (double& w : weights) {
    w = exponential(rng);
    total += w;
  }
  for (double w : weights) {
    const ComplexVector v = random_pure_state(d, rng);
    m += (w / total) * (v * v.adjoint());
  }
  return DensityMatrix(d1, d2, std::move(m));
}

}  // namespace qpc
