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
#include "qpc/concurrence.hpp"
#include "qpc/errors.hpp"
#include "test_support.hpp"

using namespace qpc;
using test::max_abs;

namespace {

ComplexVector product_00() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("pure_concurrence examples") {
  const PureState bell = bell_state();
  CHECK(pure_concurrence(bell) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pure_concurrence(product_00(), 2, 2) == 0.0);

  ComplexVector v = ComplexVector::Zero(4);
  v(0) = std::sqrt(0.9);
  v(3) = std::sqrt(0.1);
  // Tr rho_r^2 = 0.82, c = sqrt(2 * 0.18)
  CHECK(pure_concurrence(v, 2, 2) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(pure_concurrence_reduced(v, 2, 2) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(pure_concurrence_reduced(bell.amplitudes(), 2, 2, Subsystem::Second) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pure_concurrence_reduced(product_00(), 2, 2) == 0.0);

  // Homogeneous of degree one in |psi|^2.
  CHECK(pure_concurrence(std::sqrt(0.3) * bell.amplitudes(), 2, 2) == doctest::Approx(0.3).epsilon(1e-14));

  CHECK_THROWS_AS((void)pure_concurrence(ComplexVector::Zero(5), 2, 2), Error);
  CHECK_THROWS_AS((void)pure_concurrence_reduced(ComplexVector::Zero(5), 2, 2), Error);
}

TEST_CASE("four-term and reduced-purity forms agree") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const ComplexVector psi = random_pure_state(15, rng);
    const double c = pure_concurrence(psi, 3, 5);
    CHECK(std::abs(c - pure_concurrence_reduced(psi, 3, 5, Subsystem::First)) <= 1e-10);
    CHECK(std::abs(c - pure_concurrence_reduced(psi, 3, 5, Subsystem::Second)) <= 1e-10);
  }
}

TEST_CASE("spectral_ensemble examples") {
  const SpectralEnsemble pure = spectral_ensemble(DensityMatrix::from_pure(bell_state()));
  CHECK(pure.rank() == 1);
  CHECK(pure.mu(0) == doctest::Approx(1.0));

  const SpectralEnsemble mixed = spectral_ensemble(DensityMatrix(2, 2, ComplexMatrix::Identity(4, 4) / 4.0));
  CHECK(mixed.rank() == 4);
  for (double mu : mixed.mu) CHECK(mu == doctest::Approx(0.25));
  const SpectralEnsemble again = spectral_ensemble(DensityMatrix(2, 2, ComplexMatrix::Identity(4, 4) / 4.0));
  CHECK(max_abs(mixed.phi - again.phi) == 0.0);

  const SpectralEnsemble h = spectral_ensemble(horodecki_state(1.0));
  CHECK(h.rank() == 7);
  CHECK(h.mu(0) == doctest::Approx(1.0 / 3.0));
  CHECK(h.truncated_weight <= 1e-12);
  CHECK(max_abs(h.phi.adjoint() * h.phi - ComplexMatrix::Identity(7, 7)) <= 1e-9);
  CHECK(std::abs(h.mu.sum() + h.truncated_weight - 1.0) <= 1e-9);
}

TEST_CASE("concurrence tensor on pure states") {
  const ConcurrenceTensor bell = build_concurrence_tensor(spectral_ensemble(DensityMatrix::from_pure(bell_state())));
  REQUIRE(bell.n == 1);
  CHECK(std::abs(bell(0, 0, 0, 0) - 1.0) <= 1e-14);
  const ConcurrenceTensor product =
      build_concurrence_tensor(spectral_ensemble(DensityMatrix::from_pure(PureState(2, 2, product_00()))));
  CHECK(std::abs(product(0, 0, 0, 0)) <= 1e-15);
}

TEST_CASE("concurrence tensor matches the literal trace definition") {
  Rng rng(42);
  const std::pair<Eigen::Index, Eigen::Index> dims[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (int trial = 0; trial < 12; ++trial) {
    const auto [d1, d2] = dims[trial % 4];
    const DensityMatrix rho = random_density_matrix(d1, d2, 1 + trial % 5, rng);
    const SpectralEnsemble e = spectral_ensemble(rho);
    CHECK(max_abs(build_concurrence_tensor(e).flat - test::literal_tensor(e).flat) <= 1e-12);
  }
  const SpectralEnsemble h = spectral_ensemble(horodecki_state(0.5));
  CHECK(max_abs(build_concurrence_tensor(h).flat - test::literal_tensor(h).flat) <= 1e-12);
}

TEST_CASE("concurrence tensor symmetries and positivity") {
  Rng rng(43);
  const std::pair<Eigen::Index, Eigen::Index> dims[] = {{2, 2}, {2, 3}, {3, 3}};
  for (int trial = 0; trial < 30; ++trial) {
    const auto [d1, d2] = dims[trial % 3];
    const Eigen::Index rank = std::min<Eigen::Index>(2 + trial % 5, d1 * d2);
    const ConcurrenceTensor a = build_concurrence_tensor(spectral_ensemble(random_density_matrix(d1, d2, rank, rng)));
    const test::SymmetryDefects d = test::symmetry_defects(a);
    CHECK(d.swap_both <= 1e-10);
    CHECK(d.swap_lower <= 1e-10);
    CHECK(d.hermitian <= 1e-10);
    CHECK(min_eigenvalue(a.flat) >= -1e-9);
  }
  const ConcurrenceTensor h = build_concurrence_tensor(spectral_ensemble(horodecki_state(0.5)));
  CHECK(min_eigenvalue(h.flat) >= -1e-9);
}

TEST_CASE("two-qubit tensor has rank one") {
  // For two qubits the antisymmetric parts are one-dimensional, so the
  // approximation is exact there.
  Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const ConcurrenceTensor a = build_concurrence_tensor(spectral_ensemble(random_density_matrix(2, 2, 4, rng)));
    CHECK(decompose_tensor(a).size() == 1);
  }
}

TEST_CASE("build_tau") {
  SUBCASE("rank-1 state gives the 1x1 matrix [c]") {
    Rng rng(45);
    const PureState psi(3, 3, random_pure_state(9, rng));
    const TauOutcome t = build_tau(build_concurrence_tensor(spectral_ensemble(DensityMatrix::from_pure(psi))));
    REQUIRE(std::holds_alternative<TauMatrix>(t));
    const ComplexMatrix& tau = std::get<TauMatrix>(t).tau;
    REQUIRE(tau.rows() == 1);
    CHECK(std::abs(tau(0, 0) - pure_concurrence(psi)) <= 1e-12);
  }
  SUBCASE("separable dominant eigenvector") {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m.diagonal() << 0.7, 0.1, 0.1, 0.1;
    const TauOutcome t = build_tau(build_concurrence_tensor(spectral_ensemble(DensityMatrix(2, 2, m))));
    CHECK(std::holds_alternative<SeparableDominant>(t));
  }
  SUBCASE("Werner p = 0.8 against the literal definition") {
    const SpectralEnsemble e = spectral_ensemble(werner_state(0.8));
    REQUIRE(e.rank() == 4);
    const TauOutcome t = build_tau(build_concurrence_tensor(e));
    REQUIRE(std::holds_alternative<TauMatrix>(t));
    const ComplexMatrix& tau = std::get<TauMatrix>(t).tau;
    const double norm = std::sqrt(test::literal_tensor_entry(e, 0, 0, 0, 0).real());
    for (Eigen::Index j = 0; j < 4; ++j)
      for (Eigen::Index k = 0; k < 4; ++k) CHECK(std::abs(tau(j, k) - test::literal_tensor_entry(e, j, k, 0, 0) / norm) <= 1e-12);
    CHECK(symmetry_violation(tau) == 0.0);
    // Dominant term: mu_1 c(Phi_1) with Phi_1 the Bell state.
    CHECK(std::abs(tau(0, 0)) == doctest::Approx(0.85).epsilon(1e-12));
  }
}

TEST_CASE("tau_from_ensemble equals build_tau on the full tensor") {
  Rng rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d1 = 2 + trial % 2, d2 = 2 + (trial / 2) % 3;
    const SpectralEnsemble e = spectral_ensemble(random_density_matrix(d1, d2, 1 + trial % (d1 * d2), rng));
    const TauOutcome fast = tau_from_ensemble(e);
    const TauOutcome full = build_tau(build_concurrence_tensor(e));
    REQUIRE(fast.index() == full.index());
    if (std::holds_alternative<TauMatrix>(fast)) {
      CHECK(max_abs(std::get<TauMatrix>(fast).tau - std::get<TauMatrix>(full).tau) <= 1e-13);
    }
  }
}

TEST_CASE("qp_concurrence examples") {
  const QpaResult bell = qp_concurrence(DensityMatrix::from_pure(bell_state()));
  CHECK(bell.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(bell.separable_dominant);
  CHECK(bell.dominant_weight == doctest::Approx(1.0));

  const QpaResult w = qp_concurrence(werner_state(0.8));
  CHECK(w.value > 0.0);
  CHECK(w.value <= 0.7 + 1e-9);
  CHECK(w.lambdas.size() == 4);

  for (int i = 1; i <= 99; ++i) CHECK(qp_concurrence(horodecki_state(i / 100.0)).value > 0.0);

  const QpaResult flat = qp_concurrence(DensityMatrix(2, 2, ComplexMatrix::Identity(4, 4) / 4.0));
  CHECK(flat.value == 0.0);
  CHECK(flat.dominant_degenerate);
  CHECK(flat.separable_dominant);
}

TEST_CASE("qp_concurrence is exact on pure states") {
  Rng rng(47);
  for (auto [d1, d2] : {std::pair<Eigen::Index, Eigen::Index>{2, 2}, {3, 3}, {3, 5}}) {
    for (int i = 0; i < 200; ++i) {
      const PureState psi(d1, d2, random_pure_state(d1 * d2, rng));
      CHECK(std::abs(qp_concurrence(DensityMatrix::from_pure(psi)).value - pure_concurrence(psi)) <= 1e-10);
    }
  }
}

TEST_CASE("qp_concurrence is a lower bound for two qubits") {
  Rng rng(48);
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = random_density_matrix(2, 2, 1 + i % 4, rng);
    CHECK(qp_concurrence(rho).value <= wootters_concurrence_2qubit(rho) + 1e-9);
  }
}

TEST_CASE("qp_concurrence is invariant under local unitaries") {
  Rng rng(49);
  const std::pair<Eigen::Index, Eigen::Index> dims[] = {{2, 2}, {2, 3}, {3, 3}, {3, 5}};
  for (int trial = 0; trial < 20; ++trial) {
    const auto [d1, d2] = dims[trial % 4];
    const DensityMatrix rho = random_density_matrix(d1, d2, 1 + trial % 3, rng);
    const ComplexMatrix u = test::random_local_unitary(d1, d2, rng);
    const DensityMatrix moved(d1, d2, u * rho.matrix() * u.adjoint());
    CHECK(std::abs(qp_concurrence(rho).value - qp_concurrence(moved).value) <= 1e-9);
  }
}

TEST_CASE("ensemble_from_left_unitary") {
  Rng rng(50);
  SUBCASE("identity recovers the eigen-ensemble") {
    const SpectralEnsemble e = spectral_ensemble(werner_state(0.6));
    const PureDecomposition d = ensemble_from_left_unitary(e, ComplexMatrix::Identity(e.rank(), e.rank()));
    CHECK((d.weights - e.mu).cwiseAbs().maxCoeff() <= 1e-12);
    for (Eigen::Index i = 0; i < e.rank(); ++i) {
      CHECK(max_abs(d.vectors.col(i) - std::sqrt(e.mu(i)) * e.phi.col(i)) <= 1e-12);
    }
  }
  SUBCASE("phase only for a pure state") {
    const SpectralEnsemble e = spectral_ensemble(DensityMatrix::from_pure(bell_state()));
    ComplexMatrix v(1, 1);
    v(0, 0) = std::polar(1.0, 0.9);
    const PureDecomposition d = ensemble_from_left_unitary(e, v);
    CHECK(d.weights(0) == doctest::Approx(1.0));
    CHECK(max_abs(d.reconstruct() - bell_state().projector()) <= 1e-12);
  }
  SUBCASE("Haar V with two extra members reconstructs rho") {
    const DensityMatrix rho = horodecki_state(0.5);
    const SpectralEnsemble e = spectral_ensemble(rho);
    const ComplexMatrix v = haar_left_unitary(e.rank() + 2, e.rank(), rng);
    const PureDecomposition d = ensemble_from_left_unitary(e, v);
    CHECK(max_abs(d.reconstruct() - rho.matrix()) <= 1e-9);
    CHECK(d.weights.sum() == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("rejects a V that is not left-unitary") {
    const SpectralEnsemble e = spectral_ensemble(werner_state(0.6));
    try {
      (void)ensemble_from_left_unitary(e, 1.1 * ComplexMatrix::Identity(4, 4));
      FAIL("expected rejection");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotLeftUnitary);
      CHECK(err.magnitude() == doctest::Approx(0.21));
    }
    CHECK_THROWS_AS((void)ensemble_from_left_unitary(e, ComplexMatrix::Identity(3, 3)), Error);
  }
}

TEST_CASE("convex_roof_objective") {
  Rng rng(51);
  SUBCASE("rank one") {
    const PureState psi(3, 3, random_pure_state(9, rng));
    const ConcurrenceTensor a = build_concurrence_tensor(spectral_ensemble(DensityMatrix::from_pure(psi)));
    CHECK(std::abs(convex_roof_objective(a, ComplexMatrix::Identity(1, 1)) - pure_concurrence(psi)) <= 1e-12);
    // Any unit column spreads the same state over several members.
    CHECK(std::abs(convex_roof_objective(a, haar_left_unitary(3, 1, rng)) - pure_concurrence(psi)) <= 1e-12);
  }
  SUBCASE("identity V equals the eigen-ensemble average, computed two ways") {
    const SpectralEnsemble e = spectral_ensemble(werner_state(0.8));
    const ConcurrenceTensor a = build_concurrence_tensor(e);
    double direct = 0.0;
    for (Eigen::Index i = 0; i < e.rank(); ++i) direct += pure_concurrence(std::sqrt(e.mu(i)) * e.phi.col(i), 2, 2);
    CHECK(std::abs(convex_roof_objective(a, ComplexMatrix::Identity(4, 4)) - direct) <= 1e-9);
  }
  SUBCASE("any V: objective is the ensemble average and non-negative") {
    const SpectralEnsemble e = spectral_ensemble(horodecki_state(0.5));
    const ConcurrenceTensor a = build_concurrence_tensor(e);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix v = haar_left_unitary(e.rank() + trial % 3, e.rank(), rng);
      const PureDecomposition d = ensemble_from_left_unitary(e, v);
      double average = 0.0;
      for (Eigen::Index i = 0; i < d.vectors.cols(); ++i) average += pure_concurrence(d.vectors.col(i), 3, 3);
      const double objective = convex_roof_objective(a, v);
      CHECK(objective >= 0.0);
      CHECK(std::abs(objective - average) <= 1e-10);
    }
  }
}

TEST_CASE("decompose_tensor") {
  Rng rng(52);
  SUBCASE("rank one") {
    const PureState psi(2, 3, random_pure_state(6, rng));
    const auto terms = decompose_tensor(build_concurrence_tensor(spectral_ensemble(DensityMatrix::from_pure(psi))));
    REQUIRE(terms.size() == 1);
    CHECK(std::abs(std::abs(terms[0](0, 0)) - pure_concurrence(psi)) <= 1e-12);
  }
  SUBCASE("reconstruction and symmetry") {
    for (const DensityMatrix& rho : {horodecki_state(0.5), random_density_matrix(3, 3, 5, rng)}) {
      const ConcurrenceTensor a = build_concurrence_tensor(spectral_ensemble(rho));
      const auto terms = decompose_tensor(a);
      ComplexMatrix rebuilt = ComplexMatrix::Zero(a.n * a.n, a.n * a.n);
      for (const ComplexMatrix& t : terms) {
        CHECK(symmetry_violation(t) <= 1e-9);
        ComplexVector flat(t.size());
        for (Eigen::Index j = 0; j < a.n; ++j)
          for (Eigen::Index k = 0; k < a.n; ++k) flat(j * a.n + k) = t(j, k);
        rebuilt += flat * flat.adjoint();
      }
      CHECK(max_abs(rebuilt - a.flat) <= 1e-8);
    }
  }
}

TEST_CASE("verify_tau_membership") {
  Rng rng(53);
  SUBCASE("rank one") {
    const ConcurrenceTensor a = build_concurrence_tensor(spectral_ensemble(DensityMatrix::from_pure(bell_state())));
    const MembershipCheck m = verify_tau_membership(a, std::get<TauMatrix>(build_tau(a)));
    CHECK(m.member);
    CHECK(m.residual <= 1e-14);
  }
  SUBCASE("mixed states") {
    for (const DensityMatrix& rho : {horodecki_state(0.5), werner_state(0.8), random_density_matrix(3, 3, 6, rng)}) {
      const ConcurrenceTensor a = build_concurrence_tensor(spectral_ensemble(rho));
      const MembershipCheck m = verify_tau_membership(a, std::get<TauMatrix>(build_tau(a)));
      CHECK(m.member);
      CHECK(m.residual <= 1e-8);
      CHECK(std::abs(m.z_norm_squared - 1.0) <= 1e-10);
    }
  }
  SUBCASE("a wrong tau is not a member") {
    const ConcurrenceTensor a = build_concurrence_tensor(spectral_ensemble(horodecki_state(0.5)));
    TauMatrix tau = std::get<TauMatrix>(build_tau(a));
    tau.tau(0, 1) += 1e-3;
    tau.tau(1, 0) += 1e-3;
    CHECK_FALSE(verify_tau_membership(a, tau).member);
  }
  SUBCASE("separable dominant vector is the degenerate case") {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m.diagonal() << 0.7, 0.1, 0.1, 0.1;
    const ConcurrenceTensor a = build_concurrence_tensor(spectral_ensemble(DensityMatrix(2, 2, m)));
    CHECK(verify_tau_membership(a, TauMatrix{ComplexMatrix::Zero(4, 4)}).degenerate);
  }
}
