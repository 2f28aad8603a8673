#include <cmath>

#include "gtest/gtest.h"
#include "spapt/channels.hpp"
#include "spapt/errors.hpp"
#include "spapt/random.hpp"

namespace spapt {
namespace {

ComplexMatrix sigma_y_conjugate(const ComplexMatrix& x) { return pauli(2) * x * pauli(2); }

TEST(VStates, TetrahedralOverlapsAndFrame) {
  const auto v = v_states();
  ComplexMatrix frame(2);
  for (std::size_t j = 0; j < 4; ++j) {
    frame += v[j].projector();
    for (std::size_t k = j + 1; k < 4; ++k) {
      EXPECT_NEAR(std::norm(inner(v[j].amplitudes(), v[k].amplitudes())), 1.0 / 3.0, 1e-14);
    }
    EXPECT_GT(v[j][0].real(), 0.0);
    EXPECT_NEAR(v[j][0].imag(), 0.0, 1e-15);
  }
  EXPECT_LT(max_abs_diff(frame, 2.0 * ComplexMatrix::identity(2)), 1e-14);
}

TEST(SpaPovm, CompleteAndPositive) {
  ComplexMatrix total(2);
  for (const ComplexMatrix& effect : spa_povm()) {
    EXPECT_GE(min_eigenvalue(effect), -1e-15);
    EXPECT_NEAR(trace(effect).real(), 0.5, 1e-15);
    total += effect;
  }
  EXPECT_LT(max_abs_diff(total, ComplexMatrix::identity(2)), 1e-14);
}

TEST(MeasurePrepare, RejectsIncompletePovm) {
  std::vector<ComplexMatrix> povm = spa_povm();
  povm.pop_back();
  const auto vs = v_states();
  std::vector<PureState> prepared(vs.begin(), vs.begin() + 3);
  EXPECT_THROW(MeasurePrepareChannel(povm, prepared), InvalidInput);
  povm = spa_povm();
  EXPECT_THROW(MeasurePrepareChannel(povm, prepared), InvalidInput);  // count mismatch
}

TEST(SpaTranspose, ActionOnGroundState) {
  const double ground[] = {1.0, 0.0};
  const double expected[] = {2.0 / 3.0, 1.0 / 3.0};
  EXPECT_LT(max_abs_diff(spa_transpose().apply(ComplexMatrix::diagonal(ground)),
                         ComplexMatrix::diagonal(expected)),
            1e-14);
}

TEST(SpaInversion, ActionOnGroundState) {
  const double ground[] = {1.0, 0.0};
  const double expected[] = {1.0 / 3.0, 2.0 / 3.0};
  EXPECT_LT(max_abs_diff(spa_inversion().apply(ComplexMatrix::diagonal(ground)),
                         ComplexMatrix::diagonal(expected)),
            1e-14);
}

TEST(SpaTranspose, ClosedFormOnRandomInputs) {
  Rng rng = make_stream(31, 0);
  const MeasurePrepareChannel t = spa_transpose();
  const MeasurePrepareChannel theta = spa_inversion();
  const ComplexMatrix id = ComplexMatrix::identity(2);
  for (int trial = 0; trial < 200; ++trial) {
    // Linear in X, so arbitrary (non-Hermitian) inputs are fair game.
    const ComplexMatrix x = random_matrix(2, rng);
    const complex tr = trace(x);
    EXPECT_LT(max_abs_diff(t.apply(x), (1.0 / 3.0) * transpose(x) + (tr / 3.0) * id), 1e-12);
    EXPECT_LT(max_abs_diff(theta.apply(x), (2.0 / 3.0 * tr) * id - (1.0 / 3.0) * x), 1e-12);
  }
}

TEST(SpaInversion, IsSigmaYConjugateOfSpaTranspose) {
  const Superoperator t = QuantumChannel(spa_transpose()).superoperator();
  const Superoperator theta = QuantumChannel(spa_inversion()).superoperator();
  const Superoperator conjugated = Superoperator::from_map(
      2, 2, [&](const ComplexMatrix& x) { return sigma_y_conjugate(t.apply(x)); });
  EXPECT_LT(max_abs_diff(theta, conjugated), 1e-14);
}

TEST(Depolarize, MatchesReplaceMapAndChoi) {
  EXPECT_LT(max_abs_diff(depolarize().superoperator(), replace_map(2)), 1e-12);
  EXPECT_LT(max_abs_diff(choi(depolarize()).mat, 0.25 * ComplexMatrix::identity(4)), 1e-14);
}

TEST(Choi, IdentityIsMaximallyEntangledProjector) {
  const ComplexMatrix c = choi(identity_map(2)).mat;
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_LT(max_abs_diff(c, ComplexMatrix::projector(Ket{h, 0.0, 0.0, h})), 1e-15);
  EXPECT_TRUE(is_cp(identity_map(4)));
  EXPECT_TRUE(is_tp(identity_map(4)));
}

TEST(Choi, TransposeIsNotCompletelyPositive) {
  EXPECT_NEAR(choi_min_eigenvalue(transpose_map(2)), -0.5, 1e-12);
  EXPECT_FALSE(is_cp(transpose_map(2)));
  EXPECT_TRUE(is_tp(transpose_map(2)));
  EXPECT_NEAR(choi_min_eigenvalue(ideal_pt_map()), -0.5, 1e-9);
  EXPECT_THROW(QuantumChannel{ideal_pt_map()}, InvalidInput);
  EXPECT_THROW(QuantumChannel{2.0 * identity_map(2)}, InvalidInput);
}

TEST(Superoperator, TensorActsFactorwise) {
  Rng rng = make_stream(32, 0);
  const Superoperator a = QuantumChannel(spa_transpose()).superoperator();
  const Superoperator b = depolarize().superoperator();
  const Superoperator ab = tensor(a, b);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix x = random_matrix(2, rng);
    const ComplexMatrix y = random_matrix(2, rng);
    EXPECT_LT(max_abs_diff(ab.apply(kron(x, y)), kron(a.apply(x), b.apply(y))), 1e-12);
  }
}

TEST(SpaPt, SuperoperatorIdentity) {
  const Superoperator expected = (1.0 / 9.0) * ideal_pt_map() + (8.0 / 9.0) * replace_map(4);
  EXPECT_LT(max_abs_diff(spa_pt().superoperator(), expected), 1e-10);
}

TEST(SpaPt, BranchesAreWeightedAndPhysical) {
  const auto branches = spa_pt_branches();
  EXPECT_DOUBLE_EQ(branches[0].weight + branches[1].weight, 1.0);
  EXPECT_NEAR(branches[0].weight, 1.0 / 3.0, 1e-15);
  for (const SpaPtBranch& branch : branches) {
    EXPECT_EQ(branch.on_a.dim_in(), 2u);
    EXPECT_EQ(branch.on_b.dim_in(), 2u);
  }
  EXPECT_TRUE(is_cp(spa_pt().superoperator()));
  EXPECT_TRUE(is_tp(spa_pt().superoperator()));
}

TEST(SpaPt, BellSpectrum) {
  for (BellKind kind : kAllBellKinds) {
    const auto eig = herm_eig(apply(spa_pt(), bell(kind)).matrix()).eigenvalues;
    EXPECT_NEAR(eig[0], 1.0 / 6.0, 1e-12) << to_string(kind);
    for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(eig[k], 5.0 / 18.0, 1e-12);
  }
}

TEST(SpaPt, ProductAndMaximallyMixedInputs) {
  const DensityMatrix ground(PureState(Ket{1.0, 0.0, 0.0, 0.0}).density());
  EXPECT_NEAR(min_eigenvalue(apply(spa_pt(), ground).matrix()), 2.0 / 9.0, 1e-12);
  EXPECT_LT(max_abs_diff(apply(spa_pt(), maximally_mixed(4)).matrix(),
                         0.25 * ComplexMatrix::identity(4)),
            1e-14);
}

TEST(SpaPt, AffineSpectrumLaw) {
  Rng rng = make_stream(33, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho(random_mixed_state(4, 1 + trial % 4, rng));
    const auto pt = herm_eig(ideal_pt(rho)).eigenvalues;
    const auto spa = herm_eig(apply(spa_pt(), rho).matrix()).eigenvalues;
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(spa[k], pt[k] / 9.0 + 2.0 / 9.0, 1e-10);
  }
}

TEST(Apply, RejectsDimensionMismatch) {
  EXPECT_THROW(apply(spa_pt(), maximally_mixed(2)), InvalidInput);
}

}  // namespace
}  // namespace spapt
