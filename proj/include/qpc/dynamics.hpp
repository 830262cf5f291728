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

#ifndef QPC_DYNAMICS_HPP
#define QPC_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qpc/concurrence.hpp"

namespace qpc {

/// A bipartite d1 x d2 system coupled to a d_bath bath under
/// H = alpha_s Hs (x) 1_bath + alpha_sb Hsb, both Hamiltonians drawn at random.
struct SimConfig {
  Eigen::Index d1 = 3;
  Eigen::Index d2 = 5;
  Eigen::Index d_bath = 8;
  double alpha_s = 0.2;
  double alpha_sb = 0.02;
  double t_start = 0.0;
  double t_end = 30.0;
  int t_steps = 200;
  std::uint64_t seed = 1;
  // Initial system state; drawn Haar-random from the seed when absent.
  std::optional<ComplexVector> initial_state;

  /// Throws Error(Domain) on non-positive dimensions or step count, or
  /// non-finite couplings and times.
  void validate() const;

  /// t_steps evenly spaced times from t_start to t_end inclusive.
  std::vector<double> times() const;
};

struct TrajectoryPoint {
  double t = 0.0;
  double c_qp = 0.0;
  double entropy = 0.0;
  double purity = 0.0;
  double dominant_weight = 0.0;
  bool separable_dominant = false;
  bool dominant_degenerate = false;
};

/// GUE draw: real N(0,1) diagonal, off-diagonal real and imaginary parts
/// independently N(0,1/2).
ComplexMatrix random_hermitian(Eigen::Index d, Rng& rng);

/// alpha_s Hs (x) 1_bath + alpha_sb Hsb.
ComplexMatrix total_hamiltonian(const ComplexMatrix& hs, const ComplexMatrix& hsb, Eigen::Index d_bath, double alpha_s,
                                double alpha_sb, const Tolerances& tol = default_tolerances());

/// |psi><psi| (x) 1/d_bath; the system index is the major one.
ComplexMatrix initial_total_state(const PureState& psi, Eigen::Index d_bath);

/// U rho U^dagger with U = exp(i H t).
ComplexMatrix evolve_total(const ComplexMatrix& rho_total, const UnitaryPropagator& propagator, double t);

/// Tr_bath(U rho U^dagger), validated as a d1 x d2 density matrix.
DensityMatrix evolve_reduced(const ComplexMatrix& rho_total, const UnitaryPropagator& propagator, double t,
                             Eigen::Index d1, Eigen::Index d2, const Tolerances& tol = default_tolerances());
DensityMatrix evolve_reduced(const ComplexMatrix& rho_total, const ComplexMatrix& h, double t, Eigen::Index d1,
                             Eigen::Index d2, const Tolerances& tol = default_tolerances());

/// Everything a trajectory is computed from, drawn deterministically from
/// the config seed: Hs, then Hsb, then the initial state if none is given.
struct Experiment {
  SimConfig config;
  ComplexMatrix hs;
  ComplexMatrix hsb;
  PureState initial;
  ComplexMatrix rho_total_0;
  UnitaryPropagator propagator;
};

Experiment prepare_experiment(const SimConfig& config, const Tolerances& tol = default_tolerances());

/// Evaluate the approximation and entropy on every grid time. H is
/// diagonalized once.
std::vector<TrajectoryPoint> run_trajectory(const Experiment& experiment, const Tolerances& tol = default_tolerances());
std::vector<TrajectoryPoint> run_trajectory(const SimConfig& config, const Tolerances& tol = default_tolerances());

}  // namespace qpc

#endif  // QPC_DYNAMICS_HPP
