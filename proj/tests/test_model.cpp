#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zeno/errors.hpp"
#include "zeno/model.hpp"

using namespace zeno;
using std::numbers::pi;

namespace {

RealVector eigenvalues(const ComplexMatrix& m) { return hermitian_eig(m).values; }

}  // namespace

TEST(Chain, Transcription) {
  ComplexMatrix expected(3, 3);
  expected << 2, -1, 0, -1, 0, -1, 0, -1, 0;
  EXPECT_EQ(build_chain_hamiltonian(ChainParams{3, 2.0, 1.0}), expected);

  const ComplexMatrix single = build_chain_hamiltonian(ChainParams{1, 5.0, 1.0});
  ASSERT_EQ(single.rows(), 1);
  EXPECT_EQ(single(0, 0), Complex(5.0));

  const RealVector ev = eigenvalues(build_chain_hamiltonian(ChainParams{2, 0.0, 1.0}));
  EXPECT_NEAR(ev(0), -1.0, 1e-15);
  EXPECT_NEAR(ev(1), 1.0, 1e-15);
}

TEST(Chain, Validation) {
  EXPECT_THROW(build_chain_hamiltonian(ChainParams{0, 0.0, 1.0}), InvalidParams);
  EXPECT_THROW(build_chain_hamiltonian(ChainParams{3, 0.0, -1.0}), InvalidParams);
  EXPECT_THROW(build_chain_hamiltonian(ChainParams{3, NAN, 1.0}), InvalidParams);
}

TEST(Apparatus, TwoState) {
  ComplexMatrix expected(2, 2);
  expected << 0, -0.5, -0.5, 0;
  EXPECT_EQ(build_apparatus_operator_2(0.0), expected);

  RealVector ev = eigenvalues(build_apparatus_operator_2(0.5));
  EXPECT_NEAR(ev(0), 0.0, 1e-15);
  EXPECT_NEAR(ev(1), 1.0, 1e-15);
  ev = eigenvalues(build_apparatus_operator_2(1.5));
  EXPECT_NEAR(ev(0), 1.0, 1e-15);
  EXPECT_NEAR(ev(1), 2.0, 1e-15);
}

TEST(Apparatus, GeneralN) {
  EXPECT_LT((build_apparatus_operator_N(2) - build_apparatus_operator_2(0.5)).norm(), 1e-15);
  for (std::size_t n = 2; n <= 9; ++n) {
    const RealVector ev = eigenvalues(build_apparatus_operator_N(n));
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(ev(static_cast<Eigen::Index>(k)), static_cast<double>(k), 1e-12);
  }
  EXPECT_LT((build_apparatus_operator_N(4) - oracle::dft_apparatus_operator(4)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_THROW(build_apparatus_operator_N(1), InvalidParams);
}

TEST(Apparatus, ConjugateBasisIsUnitary) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const ComplexMatrix f = conjugate_basis(n);
    const auto dn = static_cast<Eigen::Index>(n);
    EXPECT_LT((f.adjoint() * f - ComplexMatrix::Identity(dn, dn)).norm(), 1e-13);
  }
}

TEST(Hadamard, Pair) {
  const HadamardPair p = hadamard_pair();
  EXPECT_NEAR(p.b0[0].real(), 1.0 / std::sqrt(2.0), 1e-16);
  EXPECT_NEAR(p.b0[1].real(), 1.0 / std::sqrt(2.0), 1e-16);
  EXPECT_NEAR(std::abs(p.b0.amplitudes().dot(p.b1.amplitudes())), 0.0, 1e-16);
  const ComplexMatrix h = hadamard_matrix();
  EXPECT_LT((h * h - ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(MeasurementTime, Values) {
  EXPECT_NEAR(measurement_time(100.0, 2), 0.031415926535897934, 1e-17);
  EXPECT_NEAR(measurement_time(pi, 2), 1.0, 1e-16);
  EXPECT_NEAR(measurement_time(1.0, 4), pi / 2.0, 1e-16);
  EXPECT_THROW(measurement_time(0.0, 2), InvalidParams);
  EXPECT_THROW(measurement_time(-1.0, 2), InvalidParams);
}

TEST(TotalHamiltonian, DecoupledAndMinimal) {
  auto model = build_total_hamiltonian(ChainParams{2, 0.0, 1.0}, ApparatusParams{1e-12, 0.0, 2});
  RealVector ev = eigenvalues(model.total_hamiltonian());
  EXPECT_NEAR(ev(0), -1.0, 1e-11);
  EXPECT_NEAR(ev(1), -1.0, 1e-11);
  EXPECT_NEAR(ev(2), 1.0, 1e-11);
  EXPECT_NEAR(ev(3), 1.0, 1e-11);

  model = build_total_hamiltonian(ChainParams{2, 0.0, 1.0}, ApparatusParams{4.0, 0.5, 2});
  ev = eigenvalues(model.total_hamiltonian());
  EXPECT_NEAR(ev(0), -1.0, 1e-12);
  EXPECT_NEAR(ev(1), 2.0 - std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(ev(2), 1.0, 1e-12);
  EXPECT_NEAR(ev(3), 2.0 + std::sqrt(5.0), 1e-12);
  EXPECT_EQ(model.dim(), 4u);
  EXPECT_NEAR(model.measurement_time(), pi / 4.0, 1e-16);
}

TEST(TotalHamiltonian, BlockStructure) {
  const ChainParams chain{3, 0.7, 1.3};
  const ApparatusParams app{2.5, 0.2, 2};
  const auto model = build_total_hamiltonian(chain, app);
  const ComplexMatrix& h = model.total_hamiltonian();
  const ComplexMatrix hc = build_chain_hamiltonian(chain);
  const ComplexMatrix b = build_apparatus_operator_2(app.delta);
  for (Eigen::Index n = 0; n < 3; ++n) {
    for (Eigen::Index m = 0; m < 3; ++m) {
      for (Eigen::Index j = 0; j < 2; ++j) {
        for (Eigen::Index k = 0; k < 2; ++k) {
          Complex expected = (j == k) ? hc(n, m) : Complex(0.0);
          if (n == 0 && m == 0) expected += app.g * b(j, k);
          EXPECT_EQ(h(n * 2 + j, m * 2 + k), expected);
        }
      }
    }
  }
}

TEST(TotalHamiltonian, GeneralNShiftMatchesTwoState) {
  const auto two = build_total_hamiltonian(ChainParams{3, 0.0, 1.0}, ApparatusParams{3.0, 0.8, 2});
  const auto gen = build_total_hamiltonian(ChainParams{3, 0.0, 1.0}, ApparatusParams{3.0, 0.8, 3});
  EXPECT_EQ(gen.dim(), 9u);
  const RealVector ev = eigenvalues(gen.apparatus_operator());
  EXPECT_NEAR(ev(0), 0.3, 1e-12);
  EXPECT_NEAR(ev(2), 2.3, 1e-12);
  EXPECT_EQ(two.apparatus_dim(), 2u);
}

TEST(CompositeModel, RejectsNonHermitianParts) {
  ComplexMatrix bad(2, 2);
  bad << 0, 1, 0, 0;
  EXPECT_THROW(CompositeModel(ComplexMatrix::Identity(2, 2), bad, ComplexMatrix::Identity(2, 2), 1.0), InvalidMatrix);
}
