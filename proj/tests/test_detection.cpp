#include <cmath>

#include "gtest/gtest.h"
#include "spapt/channels.hpp"
#include "spapt/detection.hpp"
#include "spapt/errors.hpp"
#include "spapt/experiments.hpp"
#include "spapt/random.hpp"

namespace spapt {
namespace {

DensityMatrix ground_product() { return PureState(Ket{1.0, 0.0, 0.0, 0.0}).density(); }

TEST(Verdicts, SpaSpectrumExamples) {
  const DetectionVerdict phi = detect(bell(BellKind::PhiPlus), Method::SpaSpectrum);
  EXPECT_NEAR(phi.lambda_min, 1.0 / 6.0, 1e-12);
  EXPECT_EQ(phi.verdict, Verdict::Entangled);
  EXPECT_NEAR(phi.threshold, 2.0 / 9.0, 0.0);

  const DetectionVerdict product = detect(ground_product(), Method::SpaSpectrum);
  EXPECT_NEAR(product.lambda_min, 2.0 / 9.0, 1e-12);
  EXPECT_EQ(product.verdict, Verdict::Undetected);

  const DetectionVerdict mixed = detect(maximally_mixed(4), Method::SpaSpectrum);
  EXPECT_NEAR(mixed.lambda_min, 0.25, 1e-12);
  EXPECT_EQ(mixed.verdict, Verdict::Undetected);
}

TEST(Verdicts, PptExamples) {
  EXPECT_NEAR(detect(bell(BellKind::PsiMinus), Method::Ppt).lambda_min, -0.5, 1e-12);
  EXPECT_EQ(detect(bell(BellKind::PsiMinus), Method::Ppt).verdict, Verdict::Entangled);
  EXPECT_EQ(detect(ground_product(), Method::Ppt).verdict, Verdict::Undetected);
  EXPECT_EQ(detect(werner(2.0 / 3.0), Method::Ppt).verdict, Verdict::Undetected);
  EXPECT_EQ(detect(werner(0.66), Method::Ppt).verdict, Verdict::Entangled);
}

TEST(Verdicts, MarginAndNames) {
  const DetectionVerdict v = make_verdict(0.2, Method::FHat, 100);
  EXPECT_NEAR(v.margin(), 0.2 - 2.0 / 9.0, 1e-15);
  EXPECT_EQ(v.shots, 100u);
  for (Method m : {Method::Ppt, Method::SpaSpectrum, Method::FHat}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_THROW(parse_method("witness"), InvalidInput);
  EXPECT_EQ(to_string(Verdict::Undetected), "undetected");
}

TEST(Verdicts, PptAndSpaAgreeOnRandomStates) {
  Rng rng = make_stream(51, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const DensityMatrix rho(random_mixed_state(4, 1 + trial % 4, rng));
    EXPECT_EQ(detect(rho, Method::Ppt).verdict, detect(rho, Method::SpaSpectrum).verdict);
  }
}

TEST(FHat, ReconstructedEqualsChannelOutputOnIdealTable) {
  Rng rng = make_stream(52, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho(random_mixed_state(4, 2, rng));
    const FHatOperator f = f_hat(ideal_probabilities(rho));
    EXPECT_LT(max_abs_diff(f.mat, apply(spa_pt(), rho).matrix()), 1e-12);
  }
  for (BellKind kind : kAllBellKinds) {
    EXPECT_NEAR(lambda_min_d(f_hat(ideal_probabilities(bell(kind)))), 1.0 / 6.0, 1e-12);
  }
  EXPECT_GE(lambda_min_d(f_hat(ideal_probabilities(ground_product()))),
            lambda_min_d(f_hat(ideal_probabilities(bell(BellKind::PhiPlus)))));
}

TEST(FHat, PrintedFormProperties) {
  ProbabilityTable zero;
  EXPECT_LT(max_abs_diff(f_hat(zero, FHatForm::Printed).mat, ComplexMatrix(4)), 1e-15);

  Rng rng = make_stream(53, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho(random_mixed_state(4, 3, rng));
    const FHatOperator f = f_hat(ideal_probabilities(rho), FHatForm::Printed);
    EXPECT_LT(hermiticity_defect(f.mat), 1e-15);
    EXPECT_GE(lambda_min_d(f), -1e-12);  // nonnegative combination of PSD terms
  }
  const double bell_value = lambda_min_d(f_hat(ideal_probabilities(bell(BellKind::PhiPlus)), FHatForm::Printed));
  for (BellKind kind : kAllBellKinds) {
    EXPECT_NEAR(lambda_min_d(f_hat(ideal_probabilities(bell(kind)), FHatForm::Printed)), bell_value, 1e-10);
  }
}

TEST(FHat, SampledMeanTracksIdeal) {
  for (BellKind kind : {BellKind::PhiPlus, BellKind::PsiMinus}) {
    const double ideal = lambda_min_d(f_hat(ideal_probabilities(bell(kind))));
    double mean = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      mean += lambda_d_sampled(bell(kind), {100000, seed}) / 50.0;
    }
    EXPECT_NEAR(mean, ideal, 0.01) << to_string(kind);
  }
}

TEST(CharacteristicPolynomial, DiagonalCoefficients) {
  const double diag[] = {1.0, 2.0, 3.0, 4.0};
  const auto c = characteristic_polynomial(ComplexMatrix::diagonal(diag));
  // (k-1)(k-2)(k-3)(k-4) = k^4 - 10k^3 + 35k^2 - 50k + 24
  const std::array<double, 5> expected = {24.0, -50.0, 35.0, -10.0, 1.0};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(c[k], expected[k], 1e-12);
  EXPECT_THROW(characteristic_polynomial(ComplexMatrix::identity(2)), UnsupportedDimension);
}

TEST(DetScan, AgreesWithEigensolverOnSampledTables) {
  Rng rng = make_stream(54, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const DensityMatrix rho(random_mixed_state(4, 2, rng));
    const FHatOperator f = f_hat(sample_table(rho, {1000, static_cast<std::uint64_t>(trial)}));
    EXPECT_NEAR(lambda_min_det_scan(f), lambda_min_d(f), 1e-8);
  }
}

TEST(DetScan, DegenerateUpperRootsAreFine) {
  // Ideal Bell tables have a triple root at 5/18 above the simple root 1/6.
  for (BellKind kind : kAllBellKinds) {
    EXPECT_NEAR(lambda_min_det_scan(f_hat(ideal_probabilities(bell(kind)))), 1.0 / 6.0, 1e-9);
  }
}

TEST(DetScan, DegenerateMinimumIsReported) {
  // A double smallest root touches zero without a sign change.
  const double diag[] = {0.1, 0.1, 0.3, 0.5};
  EXPECT_THROW(lambda_min_det_scan(FHatOperator{ComplexMatrix::diagonal(diag)}), NumericError);
}

TEST(Witness, SwapWitnessValues) {
  const ComplexMatrix q = bell(BellKind::PhiPlus).matrix();
  EXPECT_NEAR(witness_expectation(bell(BellKind::PhiPlus), q), 0.5, 1e-12);
  EXPECT_NEAR(witness_expectation(bell(BellKind::PsiPlus), q), 0.5, 1e-12);
  EXPECT_NEAR(witness_expectation(bell(BellKind::PsiMinus), q), -0.5, 1e-12);
  // tr[W I/4] = tr[W]/4 = tr[Q]/4
  EXPECT_NEAR(witness_expectation(maximally_mixed(4), q), 0.25, 1e-12);
}

TEST(Witness, DetectingWitnessIsBasisDependent) {
  const ComplexMatrix q = detecting_projector(bell(BellKind::PhiPlus));
  EXPECT_NEAR(witness_expectation(bell(BellKind::PhiPlus), q), -0.5, 1e-12);
  EXPECT_NEAR(witness_expectation(bell(BellKind::PsiPlus), q), 0.5, 1e-12);
  EXPECT_NEAR(witness_expectation(bell(BellKind::PsiMinus), q), 0.5, 1e-12);
  EXPECT_NEAR(witness_expectation(bell(BellKind::PhiMinus), q), 0.5, 1e-12);
}

TEST(Witness, RejectsNonProjector) {
  EXPECT_THROW(witness_expectation(bell(BellKind::PhiPlus), ComplexMatrix::identity(4)), InvalidInput);
}

TEST(Werner, DetectionFlipsAtTwoThirds) {
  for (int g = 0; g <= 20; ++g) {
    const double p = g / 20.0;
    const DetectionVerdict v = detect(werner(p), Method::SpaSpectrum);
    EXPECT_NEAR(v.lambda_min, (p + 2.0) / 12.0, 1e-10);
    EXPECT_EQ(v.verdict == Verdict::Entangled, p < 2.0 / 3.0) << p;
  }
}

}  // namespace
}  // namespace spapt
