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

#ifndef QPC_TOLERANCES_HPP
#define QPC_TOLERANCES_HPP

#include <string>

namespace qpc {

/// Every numerical threshold used by the library, in one place.
///
/// Functions that validate or truncate take a `const Tolerances&` that
/// defaults to `default_tolerances()`. The CLI may replace the record from a
/// JSON file named by the `QPC_TOL_OVERRIDE` environment variable.
struct Tolerances {
  // Input validation.
  double hermiticity = 1e-10;     // max |M - M^dagger|
  double symmetry = 1e-10;        // max |T - T^T|
  double trace = 1e-10;           // |Tr rho - 1|
  double psd = 1e-9;              // smallest admitted eigenvalue is -psd
  double norm = 1e-10;            // | ||psi|| - 1 |
  double left_unitary = 1e-10;    // max |V^dagger V - 1|

  // Spectral bookkeeping.
  double degenerate = 1e-10;      // eigenvalues closer than this are tied
  double phase_fix = 1e-12;       // entries below this are skipped when fixing phases
  double spectral_cutoff = 1e-12; // eigenvalues of rho kept in an ensemble
  double entropy_cutoff = 1e-14;  // eigenvalues dropped from -sum mu ln mu
  double decomposition_cutoff = 1e-12;

  // Guards on analytically non-negative quantities.
  double radicand_clamp = 1e-12;
  double separable_dominant = 1e-12;  // A_11^11 below this means |Phi_1> is a product

  // Verification of the lower-bound construction.
  double membership = 1e-8;
};

/// The built-in defaults. The returned reference is to an immutable object.
const Tolerances& default_tolerances() noexcept;

/// Read a JSON object whose keys are a subset of the field names above and
/// apply it on top of `base`. Unknown keys and non-positive values are
/// rejected with `Error(ErrorKind::Parse, ...)`.
Tolerances load_tolerance_override(const std::string& path, const Tolerances& base = default_tolerances());

}  // namespace qpc

#endif  // QPC_TOLERANCES_HPP
