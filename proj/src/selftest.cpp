#include "spapt/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "spapt/channels.hpp"
#include "spapt/detection.hpp"
#include "spapt/errors.hpp"
#include "spapt/random.hpp"
#include "spapt/states.hpp"
#include "spapt/tomography.hpp"

namespace spapt {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os << what << " = " << value;
  return os.str();
}

Outcome superoperator_identity(std::uint64_t) {
  const Superoperator expected =
      (1.0 / 9.0) * ideal_pt_map() + (8.0 / 9.0) * replace_map(4);
  const double deviation = max_abs_diff(spa_pt().superoperator(), expected);
  return {deviation < 1e-10, describe("max deviation", deviation)};
}

Outcome physicality(std::uint64_t) {
  const std::vector<std::pair<const char*, Superoperator>> maps = {
      {"spa_pt", spa_pt().superoperator()},
      {"spa_transpose", QuantumChannel(spa_transpose()).superoperator()},
      {"spa_inversion", QuantumChannel(spa_inversion()).superoperator()},
      {"depolarize", depolarize().superoperator()},
  };
  for (const auto& [name, map] : maps) {
    if (!is_cp(map) || !is_tp(map)) return {false, std::string(name) + " is not CPTP"};
  }
  const double pt_min = choi_min_eigenvalue(ideal_pt_map());
  return {std::abs(pt_min + 0.5) < 1e-9, describe("Choi(1 (x) T) min eigenvalue", pt_min)};
}

Outcome measure_prepare_consistency(std::uint64_t seed) {
  Rng rng = make_stream(seed, 1);
  const MeasurePrepareChannel transpose_spa = spa_transpose();
  const MeasurePrepareChannel inversion_spa = spa_inversion();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const ComplexMatrix rho = random_mixed_state(2, 2, rng);
    const ComplexMatrix half_id = 0.5 * ComplexMatrix::identity(2);
    const ComplexMatrix t_expected = (1.0 / 3.0) * transpose(rho) + (2.0 / 3.0) * half_id;
    const ComplexMatrix i_expected = (4.0 / 3.0) * half_id - (1.0 / 3.0) * rho;
    worst = std::max(worst, max_abs_diff(transpose_spa.apply(rho), t_expected));
    worst = std::max(worst, max_abs_diff(inversion_spa.apply(rho), i_expected));
  }
  ComplexMatrix total(2);
  for (const auto& effect : spa_povm()) total += effect;
  worst = std::max(worst, max_abs_diff(total, ComplexMatrix::identity(2)));
  return {worst < 1e-10, describe("max deviation", worst)};
}

Outcome verdict_equivalence(std::uint64_t seed) {
  Rng rng = make_stream(seed, 2);
  const QuantumChannel channel = spa_pt();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const DensityMatrix rho(random_mixed_state(4, 4, rng));
    const auto pt = herm_eig(ideal_pt(rho)).eigenvalues;
    const auto spa = herm_eig(apply(channel, rho).matrix()).eigenvalues;
    for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(spa[k] - (pt[k] / 9.0 + 2.0 / 9.0)));
    if (make_verdict(pt.front(), Method::Ppt, 0).verdict !=
        make_verdict(spa.front(), Method::SpaSpectrum, 0).verdict) {
      return {false, "ppt and spa_spectrum verdicts differ at trial " + std::to_string(trial)};
    }
  }
  return {worst < 1e-10, describe("max affine-law deviation", worst)};
}

Outcome werner_closed_form(std::uint64_t) {
  double worst = 0.0;
  for (int g = 0; g <= 20; ++g) {
    const double p = g / 20.0;
    const DetectionVerdict v = detect(werner(p), Method::SpaSpectrum);
    worst = std::max(worst, std::abs(v.lambda_min - (p + 2.0) / 12.0));
    const bool expect_entangled = p < 2.0 / 3.0;
    if ((v.verdict == Verdict::Entangled) != expect_entangled) {
      return {false, "verdict flip not at p = 2/3 (p = " + std::to_string(p) + ")"};
    }
  }
  return {worst < 1e-10, describe("max deviation", worst)};
}

Outcome basis_independence(std::uint64_t) {
  double lo = 1.0, hi = -1.0;
  for (BellKind kind : kAllBellKinds) {
    const double lambda = detect(bell(kind), Method::SpaSpectrum).lambda_min;
    lo = std::min(lo, lambda);
    hi = std::max(hi, lambda);
  }
  const ComplexMatrix q = detecting_projector(bell(BellKind::PhiPlus));
  const bool witness_contrast = witness_expectation(bell(BellKind::PhiPlus), q) < 0.0 &&
                                witness_expectation(bell(BellKind::PsiPlus), q) >= 0.0 &&
                                witness_expectation(bell(BellKind::PsiMinus), q) >= 0.0;
  if (!witness_contrast) return {false, "fixed witness did not change sign across Bell states"};
  return {hi - lo < 1e-10 && std::abs(lo - 1.0 / 6.0) < 1e-10,
          describe("spread of Bell lambda_min", hi - lo)};
}

Outcome tomography_round_trip(std::uint64_t seed) {
  Rng rng = make_stream(seed, 3);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho(random_mixed_state(4, 4, rng));
    worst = std::max(worst, max_abs_diff(qst_linear_inversion(exact_pauli_expectations(rho)),
                                         rho.matrix()));
  }
  return {worst < 1e-10, describe("max deviation", worst)};
}

Outcome eigensolver(std::uint64_t seed) {
  Rng rng = make_stream(seed, 4);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix m = random_hermitian(4, rng);
    worst = std::max(worst, max_abs_diff(herm_eig(m).reconstruct(), m));
  }
  return {worst < 1e-9, describe("max reconstruction deviation", worst)};
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  const std::vector<std::pair<const char*, std::function<Outcome(std::uint64_t)>>> suites = {
      {"eigensolver_reconstruction", eigensolver},
      {"superoperator_identity", superoperator_identity},
      {"channel_physicality", physicality},
      {"measure_prepare_consistency", measure_prepare_consistency},
      {"verdict_equivalence_1000", verdict_equivalence},
      {"werner_closed_form", werner_closed_form},
      {"basis_independence", basis_independence},
      {"tomography_round_trip", tomography_round_trip},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, suite] : suites) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult result{name, false, "", 0.0};
    try {
      const Outcome outcome = suite(seed);
      result.passed = outcome.passed;
      result.detail = outcome.detail;
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace spapt
