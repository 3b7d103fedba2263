// Copyright 2026 The sqcircuit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sqc/dynamics.hpp"
#include "sqc/linalg.hpp"
#include "test_util.hpp"

namespace sqc {
namespace {

using testing::random_hermitian;
using testing::random_state;
using testing::to_oracle;

constexpr double kPi = std::numbers::pi;

double max_residual(const HermitianOperator& h, const EigenDecomposition& eig) {
  double worst = 0.0;
  for (Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const CVector v = eig.eigenvectors.col(k);
    worst = std::max(worst, (h.matrix() * v - eig.eigenvalues(k) * v).norm());
  }
  return worst;
}

TEST(HermitianEigen, PauliZ) {
  const auto eig = hermitian_eigen(HermitianOperator(pauli::z()));
  EXPECT_NEAR(eig.eigenvalues(0), -1.0, 1e-15);
  EXPECT_NEAR(eig.eigenvalues(1), 1.0, 1e-15);
}

TEST(HermitianEigen, PauliXEigenvectors) {
  const auto eig = hermitian_eigen(HermitianOperator(pauli::x()));
  EXPECT_NEAR(eig.eigenvalues(0), -1.0, 1e-15);
  EXPECT_NEAR(eig.eigenvalues(1), 1.0, 1e-15);
  CVector minus(2), plus(2);
  minus << 1.0, -1.0;
  plus << 1.0, 1.0;
  minus /= std::sqrt(2.0);
  plus /= std::sqrt(2.0);
  EXPECT_NEAR(std::abs(minus.dot(eig.eigenvectors.col(0))), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(plus.dot(eig.eigenvectors.col(1))), 1.0, 1e-12);
}

TEST(HermitianEigen, ReducedChargeQubitAtDegeneracy) {
  const HermitianOperator h(0.0 * pauli::z() - 5.0 * pauli::x());
  const auto eig = hermitian_eigen(h);
  EXPECT_NEAR(eig.eigenvalues(0), -5.0, 1e-13);
  EXPECT_NEAR(eig.eigenvalues(1), 5.0, 1e-13);
}

TEST(HermitianEigen, RejectsNonHermitian) {
  CMatrix m = pauli::x();
  m(0, 1) = 2.0;
  EXPECT_THROW(HermitianOperator{m}, ValidationError);
}

TEST(HermitianEigen, MatchesJacobiOracle) {
  std::mt19937_64 rng(11);
  for (Index n : {1, 2, 3, 5, 8, 12}) {
    const auto h = random_hermitian(n, rng);
    const auto eig = hermitian_eigen(h);
    const auto ref = oracle::hermitian_eigenvalues(to_oracle(h.matrix()));
    for (Index k = 0; k < n; ++k) {
      EXPECT_NEAR(eig.eigenvalues(k), ref[static_cast<std::size_t>(k)], 1e-10 * h.norm()) << n;
    }
  }
}

// Residual and orthonormality bounds for random matrices up to 512.
TEST(HermitianEigenProperty, ResidualAndGram) {
  std::mt19937_64 rng(7);
  for (Index n : {1, 2, 4, 17, 64, 150, 512}) {
    const auto h = random_hermitian(n, rng);
    const auto eig = hermitian_eigen(h);
    EXPECT_LE(max_residual(h, eig), 1e-10 * h.norm()) << n;
    const CMatrix gram = eig.eigenvectors.adjoint() * eig.eigenvectors;
    EXPECT_LE((gram - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10) << n;
    for (Index k = 1; k < n; ++k) EXPECT_LE(eig.eigenvalues(k - 1), eig.eigenvalues(k));
  }
}

TEST(TensorProduct, SigmaXTimesIdentity) {
  const auto p = tensor_product(HermitianOperator(pauli::x()), HermitianOperator::identity(2));
  ASSERT_EQ(p.dimension(), 4);
  EXPECT_EQ(p.matrix()(0, 2), Complex(1.0));
  EXPECT_EQ(p.matrix()(1, 3), Complex(1.0));
  EXPECT_EQ(p.matrix()(0, 1), Complex(0.0));
}

TEST(TensorProduct, IdentityTimesIdentity) {
  const auto p = tensor_product(HermitianOperator::identity(2), HermitianOperator::identity(2));
  EXPECT_TRUE(p.matrix().isApprox(CMatrix::Identity(4, 4)));
}

TEST(TensorProduct, XXIsInvolution) {
  const auto xx = tensor_product(HermitianOperator(pauli::x()), HermitianOperator(pauli::x()));
  EXPECT_LE((xx.matrix() * xx.matrix() - CMatrix::Identity(4, 4)).norm(), 1e-15);
}

TEST(TensorProductProperty, FactorsCommuteIntoProduct) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Index da = 1 + static_cast<Index>(rng() % 4);
    const Index db = 1 + static_cast<Index>(rng() % 4);
    const auto a = random_hermitian(da, rng);
    const auto b = random_hermitian(db, rng);
    const CMatrix lhs = tensor_product(a, HermitianOperator::identity(db)).matrix() *
                        tensor_product(HermitianOperator::identity(da), b).matrix();
    EXPECT_LE((lhs - tensor_product(a, b).matrix()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(tensor_product(a, b).dimension(), da * db);
  }
}

TEST(EvolveUnitary, ZeroHamiltonian) {
  std::mt19937_64 rng(5);
  const auto psi = random_state(3, rng);
  const auto out = evolve_unitary(HermitianOperator::zero(3), psi, 17.3);
  EXPECT_LE((out.amplitudes() - psi.amplitudes()).norm(), 1e-15);
}

TEST(EvolveUnitary, PrecessionPeriod) {
  const HermitianOperator h(5.0 * pauli::z());  // nu01 = 10 GHz
  const auto plus = QuantumState::normalized(CVector::Ones(2));
  const auto out = evolve_unitary(h, plus, 0.1);
  EXPECT_NEAR(std::abs(out.overlap(plus)), 1.0, 1e-12);
  const auto half = evolve_unitary(h, plus, 0.05);
  EXPECT_NEAR(std::abs(half.overlap(plus)), 0.0, 1e-12);
}

TEST(EvolveUnitary, RabiFormulaAndOracle) {
  const double ej = 1.0;
  const HermitianOperator h(-0.5 * ej * pauli::x());
  const auto zero = QuantumState::basis(2, 0);
  std::vector<double> times;
  for (int k = 0; k <= 20; ++k) times.push_back(0.05 * k);
  const auto ref = oracle::dopri5(oracle::schrodinger([&](double) { return to_oracle(h.matrix()); }),
                                  to_oracle(zero.amplitudes()), times);
  for (std::size_t k = 0; k < times.size(); ++k) {
    const auto psi = evolve_unitary(h, zero, times[k]);
    const double analytic = std::pow(std::sin(kPi * ej * times[k]), 2);
    EXPECT_NEAR(psi.probability(1), analytic, 1e-12);
    EXPECT_NEAR(std::norm(ref[k][1]), analytic, 1e-9);
  }
  EXPECT_NEAR(evolve_unitary(h, zero, 0.5).probability(1), 1.0, 1e-12);
}

TEST(EvolveUnitaryProperty, NormCompositionAndInnerProducts) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 6);
    const auto h = random_hermitian(n, rng);
    const auto psi = random_state(n, rng);
    const auto phi = random_state(n, rng);
    const double t1 = u(rng);
    const double t2 = u(rng);
    const auto direct = evolve_unitary(h, psi, t1 + t2);
    const auto split = evolve_unitary(h, evolve_unitary(h, psi, t1), t2);
    EXPECT_NEAR(direct.amplitudes().norm(), 1.0, 1e-10);
    EXPECT_LE((direct.amplitudes() - split.amplitudes()).norm(), 1e-9);
    const auto phi_t = evolve_unitary(h, phi, t1);
    const auto psi_t = evolve_unitary(h, psi, t1);
    EXPECT_NEAR(std::abs(phi_t.overlap(psi_t)), std::abs(phi.overlap(psi)), 1e-9);
  }
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (n - 1);
  return out;
}

TEST(EvolveLindblad, AmplitudeDamping) {
  const double t1 = 50.0;  // ns
  const std::vector<LindbladChannel> ch{{pauli::lowering(), 1.0 / t1}};
  const auto rho0 = DensityMatrix::pure(QuantumState::basis(2, 1));
  const auto t = linspace(0.0, 200.0, 41);
  const auto out = evolve_lindblad(HermitianOperator::zero(2), ch, rho0, t);
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double expected = std::exp(-t[k] / t1);
    EXPECT_NEAR(out[k].population(1) / expected, 1.0, 1e-6) << t[k];
  }
}

TEST(EvolveLindblad, PureDephasing) {
  const double t_phi = 30.0;
  const std::vector<LindbladChannel> ch{{pauli::z(), 1.0 / (2.0 * t_phi)}};
  const auto rho0 = DensityMatrix::pure(QuantumState::normalized(CVector::Ones(2)));
  const auto t = linspace(0.0, 90.0, 31);
  const auto out = evolve_lindblad(HermitianOperator::zero(2), ch, rho0, t);
  for (std::size_t k = 0; k < t.size(); ++k) {
    EXPECT_NEAR(2.0 * std::abs(out[k].matrix()(0, 1)), std::exp(-t[k] / t_phi), 1e-6);
  }
}

TEST(EvolveLindblad, ZeroRatesMatchUnitary) {
  std::mt19937_64 rng(21);
  const auto h = random_hermitian(4, rng);
  const auto psi = random_state(4, rng);
  const std::vector<LindbladChannel> ch{{pauli::lowering(), 0.0}};
  const std::vector<LindbladChannel> ch4{{CMatrix::Zero(4, 4), 0.0}};
  const auto t = linspace(0.0, 2.0, 11);
  const auto out = evolve_lindblad(h, ch4, DensityMatrix::pure(psi), t);
  for (std::size_t k = 0; k < t.size(); ++k) {
    const CVector v = evolve_unitary(h, psi, t[k]).amplitudes();
    EXPECT_LE((out[k].matrix() - v * v.adjoint()).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(EvolveLindblad, RejectsNegativeRate) {
  const std::vector<LindbladChannel> ch{{pauli::lowering(), -1.0}};
  const auto rho0 = DensityMatrix::pure(QuantumState::basis(2, 1));
  const std::vector<double> t{0.0, 1.0};
  EXPECT_THROW(evolve_lindblad(HermitianOperator::zero(2), ch, rho0, t), ValidationError);
}

// Random generators against the Dormand-Prince oracle, checking trace,
// Hermiticity and positivity along the way.
TEST(EvolveLindbladProperty, MatchesOracleAndStaysPhysical) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> rate(0.0, 0.5);
  for (int trial = 0; trial < 6; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 3);
    const auto h = random_hermitian(n, rng);
    std::vector<LindbladChannel> ch;
    std::vector<oracle::Jump> jumps;
    for (int c = 0; c < 2; ++c) {
      const CMatrix l = testing::random_matrix(n, rng);
      const double r = rate(rng);
      ch.push_back({l, r});
      jumps.push_back({to_oracle(l), r});
    }
    const auto psi = random_state(n, rng);
    const auto rho0 = DensityMatrix::pure(psi);
    const auto t = linspace(0.0, 1.5, 7);
    const auto out = evolve_lindblad(h, ch, rho0, t);
    const CMatrix r0 = rho0.matrix();
    oracle::State y;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) y.push_back(r0(i, j));
    const auto ref = oracle::dopri5(
        oracle::lindblad([&](double) { return to_oracle(h.matrix()); }, jumps), y, t);
    for (std::size_t k = 0; k < t.size(); ++k) {
      const CMatrix& m = out[k].matrix();
      double diff = 0.0;
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          diff = std::max(diff, std::abs(m(i, j) - ref[k][static_cast<std::size_t>(i * n + j)]));
      EXPECT_LE(diff, 1e-7) << "trial " << trial << " t " << t[k];
      EXPECT_NEAR(m.trace().real(), 1.0, 1e-8);
      EXPECT_LE((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
      Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
      EXPECT_GE(es.eigenvalues().minCoeff(), -1e-7);
    }
  }
}

TEST(EvolveLindblad, DrivenMatchesOracle) {
  DrivenHamiltonian h{HermitianOperator(-2.0 * pauli::z()), {{pauli::x(), 0.3, 4.0, 0.2}}};
  const std::vector<LindbladChannel> ch{{pauli::lowering(), 0.05}, {pauli::z(), 0.02}};
  const auto rho0 = DensityMatrix::pure(QuantumState::basis(2, 0));
  const auto t = linspace(0.0, 3.0, 13);
  const auto out = evolve_lindblad(h, ch, rho0, t);
  const auto ref = oracle::dopri5(
      oracle::lindblad([&](double tt) { return to_oracle(h.at(tt)); },
                       {{to_oracle(pauli::lowering()), 0.05}, {to_oracle(pauli::z()), 0.02}}),
      {1.0, 0.0, 0.0, 0.0}, t);
  for (std::size_t k = 0; k < t.size(); ++k) {
    EXPECT_NEAR(out[k].population(1), ref[k][3].real(), 1e-7);
    EXPECT_NEAR(std::abs(out[k].matrix()(0, 1) - ref[k][1]), 0.0, 1e-7);
  }
}

TEST(EvolveLindblad, ExactRouteAgreesWithRk4) {
  std::mt19937_64 rng(41);
  const auto h = random_hermitian(3, rng);
  const std::vector<LindbladChannel> ch{{testing::random_matrix(3, rng), 0.2}};
  const auto rho0 = DensityMatrix::pure(random_state(3, rng));
  const auto t = linspace(0.0, 2.0, 9);
  const auto a = evolve_lindblad(h, ch, rho0, t);
  const auto b = evolve_lindblad_exact(h, ch, rho0, t);
  for (std::size_t k = 0; k < t.size(); ++k) {
    EXPECT_LE((a[k].matrix() - b[k].matrix()).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(States, Invariants) {
  CVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(QuantumState{v}, ValidationError);
  EXPECT_NO_THROW(QuantumState::normalized(v));
  CMatrix rho = CMatrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix{rho}, ValidationError);  // trace 2
  rho *= 0.5;
  EXPECT_NO_THROW(DensityMatrix{rho});
  rho(0, 0) = 1.2;
  rho(1, 1) = -0.2;
  EXPECT_THROW(DensityMatrix{rho}, ValidationError);  // negative eigenvalue
}

}  // namespace
}  // namespace sqc
