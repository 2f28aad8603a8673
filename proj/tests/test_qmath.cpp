#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "spapt/errors.hpp"
#include "spapt/qmath.hpp"
#include "spapt/random.hpp"

namespace spapt {
namespace {

ComplexMatrix phi_plus_projector() {
  const double h = std::numbers::sqrt2 / 2.0;
  const Ket phi = {h, 0.0, 0.0, h};
  return ComplexMatrix::projector(phi);
}

TEST(ComplexMatrix, RejectsWrongEntryCount) {
  EXPECT_THROW(ComplexMatrix(2, std::vector<complex>(3)), InvalidInput);
  EXPECT_THROW(ComplexMatrix(2, std::vector<complex>(5)), InvalidInput);
  EXPECT_NO_THROW(ComplexMatrix(2, std::vector<complex>(4)));
}

TEST(ComplexMatrix, DimensionMismatchIsRejected) {
  const ComplexMatrix a = ComplexMatrix::identity(2);
  const ComplexMatrix b = ComplexMatrix::identity(4);
  EXPECT_THROW(a + b, InvalidInput);
  EXPECT_THROW(a * b, InvalidInput);
  EXPECT_NO_THROW(kron(a, b));
}

TEST(ComplexMatrix, KronOfPauliXSwapsBasisPairs) {
  const ComplexMatrix xx = kron(pauli(1), pauli(1));
  // |00> <-> |11>, |01> <-> |10>
  const ComplexMatrix expected{{0.0, 0.0, 0.0, 1.0},
                               {0.0, 0.0, 1.0, 0.0},
                               {0.0, 1.0, 0.0, 0.0},
                               {1.0, 0.0, 0.0, 0.0}};
  EXPECT_EQ(max_abs_diff(xx, expected), 0.0);
}

TEST(ComplexMatrix, KronBlockOrdering) {
  const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const ComplexMatrix b{{0.0, 1.0}, {complex(0.0, 1.0), 0.0}};
  const ComplexMatrix k = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(k(2 * i + r, 2 * j + c), a(i, j) * b(r, c));
      }
    }
  }
}

TEST(ComplexMatrix, AdjointIsAnInvolution) {
  Rng rng = make_stream(7, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = random_matrix(4, rng);
    EXPECT_EQ(max_abs_diff(adjoint(adjoint(m)), m), 0.0);
  }
}

TEST(ComplexMatrix, TraceOfKronFactorizes) {
  Rng rng = make_stream(8, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_matrix(2, rng);
    const ComplexMatrix b = random_matrix(2, rng);
    // Direct expansion: tr(A (x) B) = sum_i sum_k A_ii B_kk.
    complex oracle{};
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t k = 0; k < 2; ++k) oracle += a(i, i) * b(k, k);
    }
    EXPECT_LT(std::abs(trace(kron(a, b)) - oracle), 1e-12);
    EXPECT_LT(std::abs(trace(kron(a, b)) - trace(a) * trace(b)), 1e-12);
  }
}

TEST(HermEig, PauliZ) {
  const Spectrum s = herm_eig(pauli(3));
  ASSERT_EQ(s.eigenvalues.size(), 2u);
  EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-14);
}

TEST(HermEig, ScalarMatrix) {
  const Spectrum s = herm_eig(0.25 * ComplexMatrix::identity(4));
  for (double v : s.eigenvalues) EXPECT_NEAR(v, 0.25, 1e-15);
}

TEST(HermEig, PartialTransposeOfPhiPlus) {
  // PT(|phi+><phi+|) = SWAP/2, eigenvalues -1/2 (antisymmetric) and +1/2 (x3).
  const Spectrum s = herm_eig(partial_transpose(phi_plus_projector()));
  EXPECT_NEAR(s.eigenvalues[0], -0.5, 1e-12);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(s.eigenvalues[k], 0.5, 1e-12);
}

TEST(HermEig, RejectsNonHermitianAndOversized) {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(0, 1) = 1e-6;
  EXPECT_THROW(herm_eig(m), InvalidInput);
  EXPECT_THROW(herm_eig(ComplexMatrix::identity(17)), UnsupportedDimension);
}

TEST(HermEig, ReconstructsRandomHermitian) {
  Rng rng = make_stream(9, 0);
  for (std::size_t dim : {2u, 4u, 8u, 16u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix m = random_hermitian(dim, rng);
      const Spectrum s = herm_eig(m);
      EXPECT_LT(max_abs_diff(s.reconstruct(), m), 1e-9);
      EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
      double worst = 0.0;
      for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
          const complex ip = inner(s.eigenvectors[a], s.eigenvectors[b]);
          worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
        }
      }
      EXPECT_LT(worst, 1e-10);
    }
  }
}

TEST(HermEig, SpectrumInvariantUnderLocalUnitaries) {
  Rng rng = make_stream(10, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = random_hermitian(4, rng);
    const ComplexMatrix u = kron(random_qubit_unitary(rng), random_qubit_unitary(rng));
    const auto before = herm_eig(m).eigenvalues;
    const auto after = herm_eig(hermitian_part(u * m * adjoint(u))).eigenvalues;
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(before[k], after[k], 1e-9);
  }
}

TEST(PsdSqrt, ExamplesAndSquare) {
  EXPECT_LT(max_abs_diff(psd_sqrt(ComplexMatrix::identity(2)), ComplexMatrix::identity(2)), 1e-14);
  const double diag[] = {4.0, 1.0, 0.0, 0.0};
  const double root[] = {2.0, 1.0, 0.0, 0.0};
  EXPECT_LT(max_abs_diff(psd_sqrt(ComplexMatrix::diagonal(diag)), ComplexMatrix::diagonal(root)),
            1e-14);
  const ComplexMatrix phi = phi_plus_projector();
  EXPECT_LT(max_abs_diff(psd_sqrt(phi), phi), 1e-7);

  Rng rng = make_stream(11, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix rho = random_mixed_state(4, 2, rng);  // rank 2: has zero eigenvalues
    const ComplexMatrix r = psd_sqrt(rho);
    EXPECT_LT(max_abs_diff(r * r, rho), 1e-8);
  }
}

TEST(PsdSqrt, RejectsNegativeSpectrum) {
  const double diag[] = {1.0, -1e-6};
  EXPECT_THROW(psd_sqrt(ComplexMatrix::diagonal(diag)), NotPositiveSemidefinite);
  const double tiny[] = {1.0, -1e-10};
  EXPECT_NO_THROW(psd_sqrt(ComplexMatrix::diagonal(tiny)));
}

TEST(PartialTranspose, ProductAndInvolution) {
  Rng rng = make_stream(12, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix a = random_mixed_state(2, 2, rng);
    const ComplexMatrix b = random_mixed_state(2, 2, rng);
    EXPECT_LT(max_abs_diff(partial_transpose(kron(a, b)), kron(a, transpose(b))), 1e-15);
    const ComplexMatrix m = random_matrix(4, rng);
    EXPECT_EQ(max_abs_diff(partial_transpose(partial_transpose(m)), m), 0.0);
  }
}

TEST(PartialTranspose, PreservesTraceAndHermiticity) {
  Rng rng = make_stream(13, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix m = random_hermitian(4, rng);
    const ComplexMatrix pt = partial_transpose(m);
    EXPECT_LT(std::abs(trace(pt) - trace(m)), 1e-14);
    EXPECT_LT(hermiticity_defect(pt), 1e-15);
  }
  EXPECT_THROW(partial_transpose(ComplexMatrix::identity(2)), UnsupportedDimension);
}

TEST(PartialTrace, ProductMarginalsAndTrace) {
  Rng rng = make_stream(14, 0);
  const ComplexMatrix a = random_mixed_state(2, 2, rng);
  const ComplexMatrix b = 3.0 * random_mixed_state(2, 2, rng);
  EXPECT_LT(max_abs_diff(partial_trace(kron(a, b), Subsystem::A), trace(b) * a), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(kron(a, b), Subsystem::B), trace(a) * b), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(phi_plus_projector(), Subsystem::A),
                         0.5 * ComplexMatrix::identity(2)),
            1e-15);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix m = random_matrix(4, rng);
    EXPECT_LT(std::abs(trace(partial_trace(m, Subsystem::A)) - trace(m)), 1e-13);
  }
  EXPECT_THROW(partial_trace(ComplexMatrix::identity(8), Subsystem::A), UnsupportedDimension);
}

}  // namespace
}  // namespace spapt
