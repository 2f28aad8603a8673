#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "spapt/channels.hpp"
#include "spapt/qmath.hpp"
#include "spapt/states.hpp"

namespace spapt {

// Measured statistics feeding the F-hat operator.
//   p[i][j] = tr[rho |t_i><t_i| (x) M_j]
//   q[k]    = tr[rho M_k (x) |0><0|]
//   r[k]    = tr[rho M_k (x) |1><1|]
struct ProbabilityTable {
  std::array<std::array<double, 4>, 4> p{};
  std::array<double, 4> q{};
  std::array<double, 4> r{};
  std::uint64_t shots_per_setting = 0;  // 0 for exact Born-rule values

  // Throws InvalidInput on entries outside [0,1] or row sums of p above 1.
  void validate() const;
};

struct ShotConfig {
  std::uint64_t shots_per_setting = 100000;
  std::uint64_t seed = 42;
};

// {|0>, |1>, (|0>+|1>)/sqrt2, (|0>+i|1>)/sqrt2}
std::array<PureState, 4> tomo_basis();

ProbabilityTable ideal_probabilities(const DensityMatrix& rho);

// Each A-setting i is sampled separately over the 8 outcomes
// {|t_i><t_i| (x) M_j} and {(I - |t_i><t_i|) (x) M_j}; q and r come from one
// further setting with the 8-outcome POVM {M_k (x) |0><0|, M_k (x) |1><1|}.
ProbabilityTable sample_table(const DensityMatrix& rho, const ShotConfig& cfg);

struct TrajectoryResult {
  DensityMatrix state;
  std::array<std::uint64_t, 2> branch_counts{};  // per SPA-PT branch
  std::uint64_t runs = 0;
};

// Single-copy Monte Carlo of the measure-and-prepare SPA-PT; returns the
// ensemble average of the emitted states.
TrajectoryResult trajectory_spa_pt(const DensityMatrix& rho, const ShotConfig& cfg);

// expectations[a][b] = <sigma_a (x) sigma_b>; empty entries mean "not measured".
using PauliExpectations = std::array<std::array<std::optional<double>, 4>, 4>;

PauliExpectations exact_pauli_expectations(const DensityMatrix& rho);
// Nine local Pauli settings sigma_a (x) sigma_b (a, b in {x,y,z}), each with
// cfg.shots_per_setting four-outcome shots. Marginals are averaged across settings.
PauliExpectations sample_pauli_expectations(const DensityMatrix& rho, const ShotConfig& cfg);

// (1/4) sum_ab <sigma_a (x) sigma_b> sigma_a (x) sigma_b. Throws if any entry is missing.
ComplexMatrix qst_linear_inversion(const PauliExpectations& expectations);

// Nearest unit-trace PSD matrix in spectral 2-norm: negative eigenvalues are
// clipped and the deficit spread over the remaining ones until all are >= 0.
DensityMatrix project_to_physical(const ComplexMatrix& raw);

}  // namespace spapt
