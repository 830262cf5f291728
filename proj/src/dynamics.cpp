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

#include "qpc/dynamics.hpp"

#include <cmath>
#include <string>

#include "qpc/errors.hpp"

namespace qpc {

void SimConfig::validate() const {
  if (d1 < 1 || d2 < 1 || d_bath < 1) throw Error(ErrorKind::Domain, "dimensions must be >= 1");
  if (t_steps < 1) throw Error(ErrorKind::Domain, "t_steps must be >= 1");
  if (!std::isfinite(alpha_s) || !std::isfinite(alpha_sb)) throw Error(ErrorKind::Domain, "couplings must be finite");
  if (!std::isfinite(t_start) || !std::isfinite(t_end)) throw Error(ErrorKind::Domain, "time range must be finite");
  if (initial_state && initial_state->size() != d1 * d2) {
    throw Error(ErrorKind::Dimension, "initial state has " + std::to_string(initial_state->size()) +
                                          " amplitudes, system dimension is " + std::to_string(d1 * d2));
  }
}

std::vector<double> SimConfig::times() const {
  std::vector<double> out(static_cast<std::size_t>(t_steps));
  for (int i = 0; i < t_steps; ++i) {
    out[static_cast<std::size_t>(i)] =
        t_steps == 1 ? t_start : t_start + (t_end - t_start) * static_cast<double>(i) / static_cast<double>(t_steps - 1);
  }
  return out;
}

ComplexMatrix random_hermitian(Eigen::Index d, Rng& rng) {
  std::normal_distribution<double> diag(0.0, 1.0);
  std::normal_distribution<double> off(0.0, std::sqrt(0.5));
  ComplexMatrix h(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    h(i, i) = diag(rng);
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const double re = off(rng);
      const double im = off(rng);
      h(i, j) = cplx(re, im);
      h(j, i) = cplx(re, -im);
    }
  }
  return h;
}

ComplexMatrix total_hamiltonian(const ComplexMatrix& hs, const ComplexMatrix& hsb, Eigen::Index d_bath, double alpha_s,
                                double alpha_sb, const Tolerances& tol) {
  if (hs.rows() != hs.cols() || d_bath < 1 || hsb.rows() != hs.rows() * d_bath || hsb.cols() != hsb.rows()) {
    throw Error(ErrorKind::Dimension, "Hs is " + std::to_string(hs.rows()) + "x" + std::to_string(hs.cols()) +
                                          ", Hsb is " + std::to_string(hsb.rows()) + "x" + std::to_string(hsb.cols()) +
                                          ", d_bath = " + std::to_string(d_bath));
  }
  for (const ComplexMatrix* m : {&hs, &hsb}) {
    const double v = hermiticity_violation(*m);
    if (v > tol.hermiticity) throw Error(ErrorKind::NotHermitian, "Hamiltonian max |H - H^dagger| = " + std::to_string(v), v);
  }
  return alpha_s * kron(hs, ComplexMatrix::Identity(d_bath, d_bath)) + alpha_sb * hsb;
}

ComplexMatrix initial_total_state(const PureState& psi, Eigen::Index d_bath) {
  if (d_bath < 1) throw Error(ErrorKind::Dimension, "d_bath must be >= 1");
  return kron(psi.projector(), ComplexMatrix::Identity(d_bath, d_bath) / static_cast<double>(d_bath));
}

ComplexMatrix evolve_total(const ComplexMatrix& rho_total, const UnitaryPropagator& propagator, double t) {
  if (rho_total.rows() != propagator.dim() || rho_total.cols() != propagator.dim()) {
    throw Error(ErrorKind::Dimension, "state and Hamiltonian dimensions differ");
  }
  const ComplexMatrix u = propagator.at(t);
  return u * rho_total * u.adjoint();
}

DensityMatrix evolve_reduced(const ComplexMatrix& rho_total, const UnitaryPropagator& propagator, double t,
                             Eigen::Index d1, Eigen::Index d2, const Tolerances& tol) {
  const Eigen::Index system = d1 * d2;
  if (system < 1 || rho_total.rows() % system != 0) {
    throw Error(ErrorKind::Dimension, "total dimension " + std::to_string(rho_total.rows()) +
                                          " is not a multiple of the system dimension " + std::to_string(system));
  }
  const Eigen::Index d_bath = rho_total.rows() / system;
  const ComplexMatrix evolved = evolve_total(rho_total, propagator, t);
  return DensityMatrix(d1, d2, partial_trace_over_2(evolved, system, d_bath), tol);
}

DensityMatrix evolve_reduced(const ComplexMatrix& rho_total, const ComplexMatrix& h, double t, Eigen::Index d1,
                             Eigen::Index d2, const Tolerances& tol) {
  return evolve_reduced(rho_total, UnitaryPropagator(h, tol), t, d1, d2, tol);
}

namespace {

PureState draw_initial(const SimConfig& config, Rng& rng, const Tolerances& tol) {
  const Eigen::Index d = config.d1 * config.d2;
  if (config.initial_state) return PureState(config.d1, config.d2, *config.initial_state, tol);
  return PureState(config.d1, config.d2, random_pure_state(d, rng), tol);
}

}  // namespace

Experiment prepare_experiment(const SimConfig& config, const Tolerances& tol) {
  config.validate();
  Rng rng(config.seed);
  const Eigen::Index system = config.d1 * config.d2;
  ComplexMatrix hs = random_hermitian(system, rng);
  ComplexMatrix hsb = random_hermitian(system * config.d_bath, rng);
  PureState initial = draw_initial(config, rng, tol);
  ComplexMatrix rho0 = initial_total_state(initial, config.d_bath);
  ComplexMatrix h = total_hamiltonian(hs, hsb, config.d_bath, config.alpha_s, config.alpha_sb, tol);
  UnitaryPropagator propagator(h, tol);
  return Experiment{config, std::move(hs), std::move(hsb), std::move(initial), std::move(rho0), std::move(propagator)};
}

std::vector<TrajectoryPoint> run_trajectory(const Experiment& experiment, const Tolerances& tol) {
  const SimConfig& config = experiment.config;
  std::vector<TrajectoryPoint> out;
  for (double t : config.times()) {
    const DensityMatrix rho = evolve_reduced(experiment.rho_total_0, experiment.propagator, t, config.d1, config.d2, tol);
    const QpaResult q = qp_concurrence(rho, tol);
    TrajectoryPoint p;
    p.t = t;
    p.c_qp = q.value;
    p.entropy = von_neumann_entropy(rho, tol);
    p.purity = purity(rho);
    p.dominant_weight = q.dominant_weight;
    p.separable_dominant = q.separable_dominant;
    p.dominant_degenerate = q.dominant_degenerate;
    out.push_back(p);
  }
  return out;
}

std::vector<TrajectoryPoint> run_trajectory(const SimConfig& config, const Tolerances& tol) {
  return run_trajectory(prepare_experiment(config, tol), tol);
}

}  // namespace qpc
