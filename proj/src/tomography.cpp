#include "spapt/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "spapt/errors.hpp"
#include "spapt/random.hpp"

namespace spapt {

namespace {

constexpr std::uint64_t kTableStream = 0x100;
constexpr std::uint64_t kPauliStream = 0x200;
constexpr std::uint64_t kTrajectoryStream = 0x300;

constexpr double kProjectionTolerance = 1e-6;

void require_two_qubit(const DensityMatrix& rho, const char* op) {
  if (rho.dim() != 4) throw UnsupportedDimension(std::string(op) + ": requires a two-qubit state");
}

void require_shots(const ShotConfig& cfg, const char* op) {
  if (cfg.shots_per_setting == 0) {
    throw InvalidInput(std::string(op) + ": shots_per_setting must be positive");
  }
}

double born(const DensityMatrix& rho, const ComplexMatrix& effect) {
  return std::clamp(std::real(trace(rho.matrix() * effect)), 0.0, 1.0);
}

const ComplexMatrix& ket0_projector() {
  static const ComplexMatrix kP0 = ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}};
  return kP0;
}

const ComplexMatrix& ket1_projector() {
  static const ComplexMatrix kP1 = ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}};
  return kP1;
}

}  // namespace

void ProbabilityTable::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidInput(std::string("probability table: ") + name + " entry " +
                         std::to_string(v) + " outside [0, 1]");
    }
  };
  for (const auto& row : p) {
    double sum = 0.0;
    for (double v : row) {
      check(v, "p");
      sum += v;
    }
    if (sum > 1.0 + 1e-9) throw InvalidInput("probability table: a row of p sums above 1");
  }
  for (double v : q) check(v, "q");
  for (double v : r) check(v, "r");
}

std::array<PureState, 4> tomo_basis() {
  const double h = std::numbers::sqrt2 / 2.0;
  return {PureState::normalized({1.0, 0.0}), PureState::normalized({0.0, 1.0}),
          PureState::normalized({h, h}), PureState::normalized({h, complex(0.0, h)})};
}

ProbabilityTable ideal_probabilities(const DensityMatrix& rho) {
  require_two_qubit(rho, "ideal_probabilities");
  const auto basis = tomo_basis();
  const auto povm = spa_povm();
  ProbabilityTable table;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) table.p[i][j] = born(rho, kron(basis[i].projector(), povm[j]));
  }
  for (std::size_t k = 0; k < 4; ++k) {
    table.q[k] = born(rho, kron(povm[k], ket0_projector()));
    table.r[k] = born(rho, kron(povm[k], ket1_projector()));
  }
  table.shots_per_setting = 0;
  return table;
}

ProbabilityTable sample_table(const DensityMatrix& rho, const ShotConfig& cfg) {
  require_two_qubit(rho, "sample_table");
  require_shots(cfg, "sample_table");
  const auto basis = tomo_basis();
  const auto povm = spa_povm();
  const double n = static_cast<double>(cfg.shots_per_setting);
  ProbabilityTable table;
  table.shots_per_setting = cfg.shots_per_setting;

  for (std::size_t i = 0; i < 4; ++i) {
    const ComplexMatrix pass = basis[i].projector();
    const ComplexMatrix block = ComplexMatrix::identity(2) - pass;
    std::array<double, 8> probs{};
    for (std::size_t j = 0; j < 4; ++j) {
      probs[j] = born(rho, kron(pass, povm[j]));
      probs[4 + j] = born(rho, kron(block, povm[j]));
    }
    Rng rng = make_stream(cfg.seed, kTableStream + i);
    const auto counts = multinomial_counts(probs, cfg.shots_per_setting, rng);
    for (std::size_t j = 0; j < 4; ++j) table.p[i][j] = static_cast<double>(counts[j]) / n;
  }

  std::array<double, 8> probs{};
  for (std::size_t k = 0; k < 4; ++k) {
    probs[k] = born(rho, kron(povm[k], ket0_projector()));
    probs[4 + k] = born(rho, kron(povm[k], ket1_projector()));
  }
  Rng rng = make_stream(cfg.seed, kTableStream + 4);
  const auto counts = multinomial_counts(probs, cfg.shots_per_setting, rng);
  for (std::size_t k = 0; k < 4; ++k) {
    table.q[k] = static_cast<double>(counts[k]) / n;
    table.r[k] = static_cast<double>(counts[4 + k]) / n;
  }
  return table;
}

TrajectoryResult trajectory_spa_pt(const DensityMatrix& rho, const ShotConfig& cfg) {
  require_two_qubit(rho, "trajectory_spa_pt");
  require_shots(cfg, "trajectory_spa_pt");
  const auto povm = spa_povm();
  const auto vs = v_states();
  const ComplexMatrix id2 = ComplexMatrix::identity(2);

  // Branch 0 measures B and leaves A in its conditional state; branch 1 measures A
  // and leaves B in its conditional state. Both are fixed by rho, so precompute them.
  std::array<double, 4> prob_b{};
  std::array<double, 4> prob_a{};
  std::array<ComplexMatrix, 4> emitted_b;  // A-conditional (x) |v_k><v_k|
  std::array<ComplexMatrix, 4> cond_b_after_a;
  std::array<ComplexMatrix, 4> prepared_a;
  for (std::size_t k = 0; k < 4; ++k) {
    const ComplexMatrix on_b = rho.matrix() * kron(id2, povm[k]);
    prob_b[k] = std::max(std::real(trace(on_b)), 0.0);
    ComplexMatrix a_state = partial_trace(on_b, Subsystem::A);
    if (prob_b[k] > 0.0) a_state *= complex(1.0 / prob_b[k]);
    emitted_b[k] = kron(a_state, vs[k].projector());

    const ComplexMatrix on_a = rho.matrix() * kron(povm[k], id2);
    prob_a[k] = std::max(std::real(trace(on_a)), 0.0);
    cond_b_after_a[k] = partial_trace(on_a, Subsystem::B);
    if (prob_a[k] > 0.0) cond_b_after_a[k] *= complex(1.0 / prob_a[k]);
    prepared_a[k] = pauli(2) * vs[k].projector() * pauli(2);
  }

  Rng rng = make_stream(cfg.seed, kTrajectoryStream);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::discrete_distribution<int> outcome_b(prob_b.begin(), prob_b.end());
  std::discrete_distribution<int> outcome_a(prob_a.begin(), prob_a.end());
  std::uniform_int_distribution<int> random_pauli(0, 3);

  std::array<std::uint64_t, 4> counts_b{};
  std::array<std::array<std::uint64_t, 4>, 4> counts_a{};  // [outcome][pauli]
  TrajectoryResult result{maximally_mixed(4), {}, cfg.shots_per_setting};
  for (std::uint64_t run = 0; run < cfg.shots_per_setting; ++run) {
    if (unit(rng) < 1.0 / 3.0) {
      ++result.branch_counts[0];
      ++counts_b[static_cast<std::size_t>(outcome_b(rng))];
    } else {
      ++result.branch_counts[1];
      const auto k = static_cast<std::size_t>(outcome_a(rng));
      ++counts_a[k][static_cast<std::size_t>(random_pauli(rng))];
    }
  }

  const double n = static_cast<double>(cfg.shots_per_setting);
  ComplexMatrix average(4);
  for (std::size_t k = 0; k < 4; ++k) {
    if (counts_b[k] > 0) average += complex(static_cast<double>(counts_b[k]) / n) * emitted_b[k];
    for (std::size_t s = 0; s < 4; ++s) {
      if (counts_a[k][s] == 0) continue;
      const ComplexMatrix b_state = pauli(s) * cond_b_after_a[k] * pauli(s);
      average += complex(static_cast<double>(counts_a[k][s]) / n) * kron(prepared_a[k], b_state);
    }
  }
  result.state = DensityMatrix(hermitian_part(average));
  return result;
}

PauliExpectations exact_pauli_expectations(const DensityMatrix& rho) {
  require_two_qubit(rho, "exact_pauli_expectations");
  PauliExpectations out;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      out[a][b] = std::real(trace(rho.matrix() * kron(pauli(a), pauli(b))));
    }
  }
  return out;
}

PauliExpectations sample_pauli_expectations(const DensityMatrix& rho, const ShotConfig& cfg) {
  require_two_qubit(rho, "sample_pauli_expectations");
  require_shots(cfg, "sample_pauli_expectations");
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  const double n = static_cast<double>(cfg.shots_per_setting);

  std::array<std::array<double, 4>, 4> sums{};
  std::array<std::array<int, 4>, 4> hits{};
  for (std::size_t a = 1; a < 4; ++a) {
    for (std::size_t b = 1; b < 4; ++b) {
      // Outcome index 2*sa + sb with s = 0 for eigenvalue +1 and s = 1 for -1.
      std::array<double, 4> probs{};
      for (std::size_t sa = 0; sa < 2; ++sa) {
        const ComplexMatrix pa = 0.5 * (id2 + (sa == 0 ? 1.0 : -1.0) * pauli(a));
        for (std::size_t sb = 0; sb < 2; ++sb) {
          const ComplexMatrix pb = 0.5 * (id2 + (sb == 0 ? 1.0 : -1.0) * pauli(b));
          probs[2 * sa + sb] = born(rho, kron(pa, pb));
        }
      }
      Rng rng = make_stream(cfg.seed, kPauliStream + 3 * (a - 1) + (b - 1));
      const auto counts = multinomial_counts(probs, cfg.shots_per_setting, rng);
      double corr = 0.0, marg_a = 0.0, marg_b = 0.0;
      for (std::size_t sa = 0; sa < 2; ++sa) {
        for (std::size_t sb = 0; sb < 2; ++sb) {
          const double f = static_cast<double>(counts[2 * sa + sb]) / n;
          const double ea = sa == 0 ? 1.0 : -1.0;
          const double eb = sb == 0 ? 1.0 : -1.0;
          corr += ea * eb * f;
          marg_a += ea * f;
          marg_b += eb * f;
        }
      }
      sums[a][b] += corr;
      ++hits[a][b];
      sums[a][0] += marg_a;
      ++hits[a][0];
      sums[0][b] += marg_b;
      ++hits[0][b];
    }
  }
  PauliExpectations out;
  out[0][0] = 1.0;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      if (hits[a][b] > 0) out[a][b] = sums[a][b] / hits[a][b];
    }
  }
  return out;
}

ComplexMatrix qst_linear_inversion(const PauliExpectations& expectations) {
  ComplexMatrix rho(4);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      if (!expectations[a][b]) {
        throw InvalidInput("qst_linear_inversion: missing expectation for sigma_" +
                           std::to_string(a) + " (x) sigma_" + std::to_string(b));
      }
      rho += complex(*expectations[a][b] / 4.0) * kron(pauli(a), pauli(b));
    }
  }
  return rho;
}

DensityMatrix project_to_physical(const ComplexMatrix& raw) {
  const double defect = hermiticity_defect(raw);
  if (defect > kProjectionTolerance) {
    throw InvalidInput("project_to_physical: input is not Hermitian (defect " +
                       std::to_string(defect) + ")");
  }
  const complex tr = trace(raw);
  if (std::abs(tr - 1.0) > kProjectionTolerance) {
    throw InvalidInput("project_to_physical: trace must be 1 within 1e-6 (got " +
                       std::to_string(tr.real()) + ")");
  }
  Spectrum spectrum = herm_eig(hermitian_part(raw));
  std::vector<double>& values = spectrum.eigenvalues;
  std::vector<bool> active(values.size(), true);
  std::size_t n_active = values.size();
  while (true) {
    double sum = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (active[k]) sum += values[k];
    }
    const double shift = (sum - 1.0) / static_cast<double>(n_active);
    bool clipped = false;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (!active[k]) continue;
      values[k] -= shift;
      if (values[k] < 0.0) {
        values[k] = 0.0;
        active[k] = false;
        --n_active;
        clipped = true;
      }
    }
    if (!clipped || n_active == 0) break;
  }
  return DensityMatrix(hermitian_part(spectrum.reconstruct()));
}

}  // namespace spapt
