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

#include "qpc/linops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qpc/errors.hpp"

namespace qpc {
namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::Dimension, std::string(what) + " must be square, got " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
}

void fix_phase(Eigen::Ref<ComplexVector> v, double threshold) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > threshold) {
      v *= std::conj(v(i)) / mag;
      v(i) = cplx(mag, 0.0);
      return;
    }
  }
}

// Descending lexicographic comparison, entries compared real part first.
bool lex_greater(const ComplexVector& a, const ComplexVector& b, double eps) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double dr = a(i).real() - b(i).real();
    if (std::abs(dr) > eps) return dr > 0;
    const double di = a(i).imag() - b(i).imag();
    if (std::abs(di) > eps) return di > 0;
  }
  return false;
}

}  // namespace

double hermiticity_violation(const ComplexMatrix& m) {
  require_square(m, "matrix");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double symmetry_violation(const ComplexMatrix& m) {
  require_square(m, "matrix");
  if (m.size() == 0) return 0.0;
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw Error(ErrorKind::NotFinite, std::string(what) + " contains NaN or Inf");
}

EigenSystem hermitian_eigendecomposition(const ComplexMatrix& m, const Tolerances& tol) {
  require_square(m, "hermitian_eigendecomposition input");
  require_finite(m, "hermitian_eigendecomposition input");
  const double violation = hermiticity_violation(m);
  if (violation > tol.hermiticity) {
    throw Error(ErrorKind::NotHermitian, "max |M - M^dagger| = " + std::to_string(violation), violation);
  }

  const Eigen::Index n = m.rows();
  EigenSystem out;
  if (n == 0) return out;

  // Feed the solver the exactly hermitian part so both triangles agree.
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NotFinite, "hermitian eigensolver did not converge");
  }

  const RealVector& ascending = solver.eigenvalues();
  ComplexMatrix vecs = solver.eigenvectors();
  for (Eigen::Index j = 0; j < n; ++j) fix_phase(vecs.col(j), tol.phase_fix);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::reverse(order.begin(), order.end());

  // Walk groups of tied eigenvalues and sort each group's vectors.
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t stop = start + 1;
    while (stop < order.size() && std::abs(ascending(order[stop - 1]) - ascending(order[stop])) <= tol.degenerate) {
      ++stop;
    }
    if (stop - start > 1) {
      std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                       order.begin() + static_cast<std::ptrdiff_t>(stop), [&](Eigen::Index a, Eigen::Index b) {
                         return lex_greater(vecs.col(a), vecs.col(b), tol.phase_fix);
                       });
    }
    start = stop;
  }

  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values(j) = ascending(order[static_cast<std::size_t>(j)]);
    out.vectors.col(j) = vecs.col(order[static_cast<std::size_t>(j)]);
  }
  return out;
}

RealVector symmetric_singular_values(const ComplexMatrix& tau, const Tolerances& tol) {
  require_square(tau, "symmetric_singular_values input");
  require_finite(tau, "symmetric_singular_values input");
  const double violation = symmetry_violation(tau);
  if (violation > tol.symmetry) {
    throw Error(ErrorKind::NotSymmetric, "max |tau - tau^T| = " + std::to_string(violation), violation);
  }
  if (tau.size() == 0) return RealVector();
  // JacobiSVD returns singular values sorted in decreasing order.
  Eigen::JacobiSVD<ComplexMatrix> svd(tau);
  return svd.singularValues();
}

ComplexMatrix matrix_exponential_unitary(const ComplexMatrix& h, double t, const Tolerances& tol) {
  return UnitaryPropagator(h, tol).at(t);
}

UnitaryPropagator::UnitaryPropagator(const ComplexMatrix& h, const Tolerances& tol)
    : eig_(hermitian_eigendecomposition(h, tol)) {}

ComplexMatrix UnitaryPropagator::at(double t) const {
  ComplexVector phases(eig_.values.size());
  for (Eigen::Index j = 0; j < phases.size(); ++j) phases(j) = std::polar(1.0, eig_.values(j) * t);
  return eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix out(rows, cols);
  // Column-major fill, real then imaginary, fixes the stream consumption order.
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = cplx(re, im);
    }
  }
  return out;
}

ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix z = complex_gaussian(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

ComplexMatrix haar_left_unitary(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  if (cols > rows) {
    throw Error(ErrorKind::Dimension, "left-unitary matrix needs rows >= cols, got " + std::to_string(rows) + "x" +
                                          std::to_string(cols));
  }
  return haar_unitary(rows, rng).leftCols(cols);
}

}  // namespace qpc
