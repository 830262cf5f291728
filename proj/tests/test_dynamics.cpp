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

#include <cmath>

#include "doctest.h"
#include "qpc/dynamics.hpp"
#include "qpc/errors.hpp"
#include "test_support.hpp"

using namespace qpc;
using test::max_abs;

TEST_CASE("random_hermitian") {
  Rng a(71), b(71);
  const ComplexMatrix h = random_hermitian(6, a);
  CHECK(max_abs(h - random_hermitian(6, b)) == 0.0);
  CHECK(hermiticity_violation(h) == 0.0);

  // Moments of the ensemble.
  Rng rng(72);
  const int draws = 10000;
  double mean = 0.0, second = 0.0, off = 0.0;
  for (int i = 0; i < draws; ++i) {
    const ComplexMatrix x = random_hermitian(2, rng);
    mean += x(0, 0).real();
    second += x(0, 0).real() * x(0, 0).real();
    off += std::norm(x(0, 1));
  }
  mean /= draws;
  CHECK(std::abs(mean) <= 0.05);
  CHECK(std::abs(second / draws - mean * mean - 1.0) <= 0.1);
  CHECK(std::abs(off / draws - 1.0) <= 0.1);  // E|h_01|^2 = 1/2 + 1/2
}

TEST_CASE("total_hamiltonian") {
  Rng rng(73);
  const ComplexMatrix hs = random_hermitian(4, rng);
  const ComplexMatrix hsb = random_hermitian(12, rng);

  SUBCASE("no coupling: system spectrum repeated d_bath times") {
    const ComplexMatrix h = total_hamiltonian(hs, hsb, 3, 0.2, 0.0);
    const RealVector sys = hermitian_eigendecomposition(hs).values;
    const RealVector tot = hermitian_eigendecomposition(h).values;
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index r = 0; r < 3; ++r) CHECK(std::abs(tot(3 * i + r) - 0.2 * sys(i)) <= 1e-12);
  }
  SUBCASE("no system term") { CHECK(max_abs(total_hamiltonian(hs, hsb, 3, 0.0, 0.02) - 0.02 * hsb) == 0.0); }
  SUBCASE("hermitian") { CHECK(hermiticity_violation(total_hamiltonian(hs, hsb, 3, 0.2, 0.02)) <= 1e-12); }
  SUBCASE("dimension mismatch") { CHECK_THROWS_AS((void)total_hamiltonian(hs, hsb, 4, 0.2, 0.02), Error); }
}

TEST_CASE("initial_total_state") {
  Rng rng(74);
  const PureState psi(3, 5, random_pure_state(15, rng));
  const ComplexMatrix rho = initial_total_state(psi, 8);
  CHECK(std::abs(rho.trace() - 1.0) <= 1e-14);
  CHECK(rho.squaredNorm() == doctest::Approx(1.0 / 8.0));
  CHECK(max_abs(partial_trace_over_2(rho, 15, 8) - psi.projector()) <= 1e-12);
}

TEST_CASE("evolve_reduced") {
  SimConfig config;
  config.d1 = 2;
  config.d2 = 3;
  config.d_bath = 4;
  const Experiment ex = prepare_experiment(config);
  const Eigen::Index d = 6;

  SUBCASE("t = 0 gives the initial system state") {
    const DensityMatrix rho = evolve_reduced(ex.rho_total_0, ex.propagator, 0.0, 2, 3);
    CHECK(max_abs(rho.matrix() - ex.initial.projector()) <= 1e-12);
  }
  SUBCASE("uncoupled evolution stays pure and follows the system propagator") {
    const ComplexMatrix h = total_hamiltonian(ex.hs, ex.hsb, 4, 0.2, 0.0);
    const UnitaryPropagator system(ex.hs * 0.2);
    for (double t : {0.5, 3.0, 17.0}) {
      const DensityMatrix rho = evolve_reduced(ex.rho_total_0, h, t, 2, 3);
      CHECK(von_neumann_entropy(rho) <= 1e-9);
      const ComplexVector psi_t = system.at(t) * ex.initial.amplitudes();
      CHECK(max_abs(rho.matrix() - psi_t * psi_t.adjoint()) <= 1e-10);
      CHECK(std::abs(qp_concurrence(rho).value - pure_concurrence(psi_t, 2, 3)) <= 1e-9);
    }
  }
  SUBCASE("coupled evolution gives valid states") {
    for (double t : {1.0, 5.0, 40.0}) {
      const DensityMatrix rho = evolve_reduced(ex.rho_total_0, ex.propagator, t, 2, 3);
      CHECK(std::abs(rho.matrix().trace() - 1.0) <= 1e-10);
      CHECK(hermiticity_violation(rho.matrix()) <= 1e-10);
      CHECK(min_eigenvalue(rho.matrix()) >= -1e-9);
      CHECK(rho.dim() == d);
    }
  }
  SUBCASE("total purity is conserved") {
    const double p0 = ex.rho_total_0.squaredNorm();
    for (double t : {0.3, 9.0, 55.0}) CHECK(std::abs(evolve_total(ex.rho_total_0, ex.propagator, t).squaredNorm() - p0) <= 1e-10);
  }
  SUBCASE("dimension mismatch") { CHECK_THROWS_AS((void)evolve_reduced(ex.rho_total_0, ex.propagator, 1.0, 2, 5), Error); }
}

TEST_CASE("SimConfig grid and validation") {
  SimConfig c;
  c.t_start = 1.0;
  c.t_end = 2.0;
  c.t_steps = 5;
  const auto ts = c.times();
  REQUIRE(ts.size() == 5);
  CHECK(ts.front() == 1.0);
  CHECK(ts.back() == 2.0);
  CHECK(ts[2] == doctest::Approx(1.5));
  c.t_steps = 1;
  CHECK(c.times() == std::vector<double>{1.0});
  c.t_steps = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  c.t_steps = 3;
  c.d_bath = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  c.d_bath = 2;
  c.alpha_s = std::nan("");
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("run_trajectory") {
  SimConfig config;
  config.t_steps = 1;
  const auto single = run_trajectory(config);
  REQUIRE(single.size() == 1);
  const Experiment ex = prepare_experiment(config);
  CHECK(single[0].t == 0.0);
  CHECK(single[0].entropy <= 1e-9);
  CHECK(std::abs(single[0].c_qp - pure_concurrence(ex.initial)) <= 1e-9);
  CHECK(single[0].purity == doctest::Approx(1.0));

  config.t_steps = 12;
  config.t_end = 30.0;
  const auto a = run_trajectory(config);
  const auto b = run_trajectory(config);
  REQUIRE(a.size() == 12);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].c_qp == b[i].c_qp);
    CHECK(a[i].entropy == b[i].entropy);
    CHECK(a[i].c_qp >= 0.0);
    CHECK(a[i].dominant_weight <= 1.0 + 1e-12);
  }
  CHECK(a.back().entropy > 0.0);

  SimConfig other = config;
  other.seed = 2;
  CHECK(run_trajectory(other).back().c_qp != a.back().c_qp);
}

TEST_CASE("run_trajectory honours an explicit initial state") {
  SimConfig config;
  config.d1 = 2;
  config.d2 = 2;
  config.d_bath = 2;
  config.t_steps = 2;
  config.initial_state = bell_state().amplitudes();
  const auto points = run_trajectory(config);
  CHECK(points[0].c_qp == doctest::Approx(1.0).epsilon(1e-12));
  config.initial_state = ComplexVector::Ones(4);
  CHECK_THROWS_AS((void)run_trajectory(config), Error);
}
