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

#include "qpc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qpc/errors.hpp"

namespace qpc {
namespace {

Rng restart_rng(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), 0x71706331u};
  return Rng(seq);
}

}  // namespace

ComplexMatrix retract_left_unitary(const ComplexMatrix& v) {
  const Eigen::Index rows = v.rows();
  const Eigen::Index cols = v.cols();
  Eigen::HouseholderQR<ComplexMatrix> qr(v);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  // Fix the column phases so that R has a real positive diagonal; this makes
  // the retraction continuous and equal to the identity on left-unitary input.
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const cplx d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

OracleResult brute_force_convex_roof(const DensityMatrix& rho, const OracleOptions& options, std::uint64_t seed,
                                     const Tolerances& tol) {
  if (options.restarts < 1 || options.iterations < 0 || options.extra_rows < 0) {
    throw Error(ErrorKind::Domain, "oracle needs restarts >= 1, iterations >= 0, extra_rows >= 0");
  }
  const SpectralEnsemble e = spectral_ensemble(rho, tol);
  const ConcurrenceTensor a = build_concurrence_tensor(e);
  const Eigen::Index n = e.rank();

  OracleResult best;
  best.value = std::numeric_limits<double>::infinity();
  // Objective evaluation re-checks left-unitarity, which the retraction
  // guarantees only up to rounding; loosen that single check.
  Tolerances search_tol = tol;
  search_tol.left_unitary = std::max(tol.left_unitary, 1e-8);

  // Success grows the step by `grow`; failure shrinks it so that a 1/5
  // success rate leaves it unchanged.
  const double grow = 1.25;
  const double shrink = std::pow(grow, -0.25);

  for (int restart = 0; restart < options.restarts; ++restart) {
    Rng rng = restart_rng(seed, restart);
    const Eigen::Index rows = n + restart % (options.extra_rows + 1);

    ComplexMatrix v;
    if (restart == 0) {
      v = ComplexMatrix::Identity(rows, n);
    } else {
      v = haar_left_unitary(rows, n, rng);
    }
    double current = convex_roof_objective(a, v, search_tol);
    ++best.evaluations;
    double step = options.initial_step;

    for (int it = 0; it < options.iterations; ++it) {
      const ComplexMatrix candidate = retract_left_unitary(v + step * complex_gaussian(rows, n, rng));
      const double value = convex_roof_objective(a, candidate, search_tol);
      ++best.evaluations;
      if (value < current) {
        current = value;
        v = candidate;
        step = std::min(step * grow, 1.0);
      } else {
        step = std::max(step * shrink, options.min_step);
      }
    }
    if (current < best.value) {
      best.value = current;
      best.best_restart = restart;
    }
  }
  return best;
}

OracleResult brute_force_convex_roof(const DensityMatrix& rho, const OracleOptions& options, Rng& rng,
                                     const Tolerances& tol) {
  return brute_force_convex_roof(rho, options, static_cast<std::uint64_t>(rng()), tol);
}

}  // namespace qpc
