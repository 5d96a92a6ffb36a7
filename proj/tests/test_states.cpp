#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "resdil/errors.hpp"
#include "resdil/functionals.hpp"
#include "resdil/rates.hpp"
#include "resdil/states.hpp"
#include "test_support.hpp"

using namespace resdil;
using testing_support::Gen;

TEST(states, StrictValidation) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.4})), ValidationError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({1.5, -0.5})), ValidationError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}), NotHermitian);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(4) * Complex(0.25), {2, 3}), BadDims);
  EXPECT_NO_THROW(DensityMatrix(ComplexMatrix::diagonal({1.0 + 5e-11, -5e-11})));
}

TEST(states, PureNormalizes) {
  const std::vector<Complex> v{3.0, Complex(0.0, 4.0)};
  const DensityMatrix rho = DensityMatrix::pure(v, {2});
  EXPECT_NEAR(rho(0, 0).real(), 0.36, 1e-15);
  EXPECT_NEAR(std::abs(rho(0, 1) - Complex(0.0, -0.48)), 0.0, 1e-15);
}

TEST(states, TensorAndPartialTrace) {
  Gen gen(1);
  const DensityMatrix a = gen.state(2);
  const DensityMatrix b = gen.state(3);
  const DensityMatrix ab = tensor(a, b);
  EXPECT_EQ(ab.dims(), (std::vector<std::size_t>{2, 3}));
  EXPECT_LT(max_abs_diff(partial_trace(ab, {0}).matrix(), a.matrix()), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(ab, {1}).matrix(), b.matrix()), 1e-14);
}

TEST(states, PureTwoQubit) {
  const double alpha = 0.3;
  const DensityMatrix psi = pure_two_qubit(alpha);
  EXPECT_NEAR(psi(0, 0).real(), std::cos(alpha) * std::cos(alpha), 1e-15);
  EXPECT_NEAR(psi(0, 3).real(), std::cos(alpha) * std::sin(alpha), 1e-15);
  EXPECT_NEAR(von_neumann_entropy(partial_trace(psi, {0})),
              testing_support::h2(std::cos(alpha) * std::cos(alpha)), 1e-12);
  EXPECT_THROW(pure_two_qubit(-0.1), ValidationError);
}

TEST(states, Singlet) {
  const DensityMatrix s = singlet();
  EXPECT_LT(max_abs_diff(partial_trace(s, {0}).matrix(), DensityMatrix::maximally_mixed(2).matrix()),
            1e-15);
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> psi_plus{0.0, r, r, 0.0};
  EXPECT_NEAR(fidelity(s, DensityMatrix::pure(psi_plus, {2, 2})), 0.0, 1e-7);
  EXPECT_NEAR(hashing_rate(s), 1.0, 1e-12);
}

TEST(states, SingletRelabelMapsPhiPlus) {
  const DensityMatrix mapped = unitary_conjugate(singlet_relabel(), phi_plus());
  EXPECT_LT(max_abs_diff(mapped.matrix(), singlet().matrix()), 1e-14);
}

TEST(states, CoherenceStates) {
  const double pi = std::numbers::pi;
  EXPECT_LT(max_abs_diff(coherence_states(pi / 4).pure.matrix(), plus_state().matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(coherence_states(0.0).mixed.matrix(),
                         DensityMatrix::maximally_mixed(2).matrix()),
            1e-15);
  EXPECT_LT(max_abs_diff(coherence_states(pi / 2).mixed.matrix(), plus_state().matrix()), 1e-15);
  const CoherenceStates s = coherence_states(0.7);
  EXPECT_NEAR(s.mixed.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_GT(hermitian_eigenvalues(s.mixed.matrix()).front(), 1e-3);
  EXPECT_THROW(coherence_states(2.0), ValidationError);
}

TEST(states, GibbsPopulations) {
  const DensityMatrix g = gibbs(Hamiltonian({0.0, 1.0, 2.5}), 0.8);
  EXPECT_TRUE(g.matrix().is_diagonal());
  const double z = 1 + std::exp(-1.0 / 0.8) + std::exp(-2.5 / 0.8);
  EXPECT_NEAR(g(0, 0).real(), 1 / z, 1e-14);
  EXPECT_NEAR(g(2, 2).real(), std::exp(-2.5 / 0.8) / z, 1e-14);
}

TEST(states, GibbsLimits) {
  EXPECT_LT(max_abs_diff(gibbs(Hamiltonian::unit_qubit(), 1e9).matrix(),
                         DensityMatrix::maximally_mixed(2).matrix()),
            1e-8);
  EXPECT_EQ(gibbs(Hamiltonian({0.0, 0.0}), 0.3)(1, 1).real(), 0.5);
  EXPECT_NEAR(gibbs(Hamiltonian::unit_qubit(), 0.3)(1, 1).real(), 0.03, 0.005);
  EXPECT_THROW(gibbs(Hamiltonian::unit_qubit(), 0.0), ValidationError);
  EXPECT_THROW(gibbs(Hamiltonian::unit_qubit(), -1.0), ValidationError);
  EXPECT_THROW(Hamiltonian({1.0, 0.0}), ValidationError);
  EXPECT_THROW(Hamiltonian({0.0}), ValidationError);
}

TEST(states, LowTemperatureGibbsIsGround) {
  const DensityMatrix g = gibbs(Hamiltonian({0.0, 1.0}), 1e-3);
  EXPECT_NEAR(g(0, 0).real(), 1.0, 1e-15);
}

TEST(states, DiagonalQubit) {
  EXPECT_LT(max_abs_diff(diagonal_qubit(0.0).matrix(), basis_state(0, 2).matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(diagonal_qubit(0.5).matrix(), DensityMatrix::maximally_mixed(2).matrix()),
            1e-15);
  EXPECT_NEAR(diagonal_qubit(0.85)(1, 1).real(), 0.85, 1e-15);
  EXPECT_THROW(diagonal_qubit(1.1), ValidationError);
}

TEST(states, MaximallyCorrelated) {
  EXPECT_TRUE(is_maximally_correlated(pure_two_qubit(0.4)));
  EXPECT_TRUE(is_maximally_correlated(phi_plus()));
  EXPECT_FALSE(is_maximally_correlated(singlet()));
  EXPECT_FALSE(is_maximally_correlated(DensityMatrix::maximally_mixed(4).with_dims({2, 2})));
  EXPECT_THROW(is_maximally_correlated(DensityMatrix::maximally_mixed(4)), BadDims);
}
