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

#ifndef QPC_IO_HPP
#define QPC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qpc/dynamics.hpp"

namespace qpc::io {

// State file: JSON object
//   {"d1": 2, "d2": 2, "matrix": [[re, im], [re, im], ...]}
// with (d1*d2)^2 entries in row-major order.

/// Parse a state document; structural problems raise Error(Parse), a
/// matrix that is not a valid state raises the matching invariant error.
DensityMatrix parse_state(const std::string& text, const Tolerances& tol = default_tolerances());
DensityMatrix read_state_file(const std::string& path, const Tolerances& tol = default_tolerances());

std::string write_state(const DensityMatrix& rho);
void write_state_file(const std::string& path, const DensityMatrix& rho);

// Simulation config: JSON object with any of the SimConfig field names
//   d1, d2, d_bath, alpha_s, alpha_sb, t_start, t_end, t_steps, seed,
//   initial_state ([[re, im], ...] of length d1*d2).
SimConfig parse_sim_config(const std::string& text, SimConfig base = {});
SimConfig read_sim_config_file(const std::string& path, SimConfig base = {});

/// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double value);

/// `a,c_qp,entropy,min_eig_pt` rows.
struct HorodeckiRow {
  double a = 0.0;
  double c_qp = 0.0;
  double entropy = 0.0;
  double min_eig_pt = 0.0;
};
std::vector<HorodeckiRow> horodecki_sweep(double a_min, double a_max, int steps,
                                          const Tolerances& tol = default_tolerances());
void write_horodecki_csv(std::ostream& out, const std::vector<HorodeckiRow>& rows);

/// `# seed=N` line, then `t,c_qp,entropy,purity,mu1` rows.
void write_trajectory_csv(std::ostream& out, const SimConfig& config, const std::vector<TrajectoryPoint>& points);

}  // namespace qpc::io

#endif  // QPC_IO_HPP
