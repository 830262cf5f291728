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

#ifndef QPC_ORACLE_HPP
#define QPC_ORACLE_HPP

#include <cstdint>

#include "qpc/concurrence.hpp"

namespace qpc {

struct OracleOptions {
  int restarts = 64;
  int iterations = 2000;
  // Restart r searches over (n + r % (extra_rows + 1)) x n left-unitary V.
  int extra_rows = 2;
  double initial_step = 0.3;
  double min_step = 1e-7;
};

struct OracleResult {
  double value = 0.0;  // best objective found; an upper estimate of c(rho)
  int best_restart = -1;
  long evaluations = 0;
};

/// Random-restart local search for the infimum of the ensemble-average
/// concurrence over left-unitary V.
///
/// Every restart gets its own generator seeded from (seed, restart index), so
/// the result is reproducible and can only decrease when either budget grows.
/// Restart 0 starts from the eigen-ensemble, the others from Haar-random V.
/// A step is a QR retraction of V + s G with G complex Gaussian; it is kept if
/// it lowers the objective. The step size s follows the one-fifth success rule.
OracleResult brute_force_convex_roof(const DensityMatrix& rho, const OracleOptions& options, std::uint64_t seed,
                                     const Tolerances& tol = default_tolerances());

/// Convenience overload drawing the base seed from `rng`.
OracleResult brute_force_convex_roof(const DensityMatrix& rho, const OracleOptions& options, Rng& rng,
                                     const Tolerances& tol = default_tolerances());

/// Q factor of the thin QR of V with R made real-positive on the diagonal.
ComplexMatrix retract_left_unitary(const ComplexMatrix& v);

}  // namespace qpc

#endif  // QPC_ORACLE_HPP
