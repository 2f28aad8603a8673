#pragma once

// End-to-end pipelines behind the CLI: the Bell-state table of minimum
// eigenvalues and the state-family sweep in the tangle / linear-entropy plane.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spapt/detection.hpp"
#include "spapt/io.hpp"
#include "spapt/states.hpp"
#include "spapt/tomography.hpp"

namespace spapt {

struct FamilyPoint {
  double p;
  double alpha;
};

// The nine (p, alpha) pairs of the experimental state family.
inline constexpr std::array<FamilyPoint, 9> kNineFamilyStates = {{
    {0.0, 0.71},
    {0.12, 0.71},
    {0.25, 0.71},
    {0.3, 0.71},
    {0.51, 0.71},
    {0.0, 0.92},
    {0.0, 0.97},
    {0.37, 0.86},
    {0.42, 0.92},
}};

// Minimum eigenvalue of the exact SPA-PT output.
double lambda_th(const DensityMatrix& rho);
// Trajectory simulation of the SPA-PT, Pauli tomography of its output with
// cfg.shots_per_setting shots per setting, linear inversion, minimum eigenvalue.
double lambda_exp(const DensityMatrix& rho, const ShotConfig& cfg);
// F-hat minimum eigenvalue from a sampled probability table.
double lambda_d_sampled(const DensityMatrix& rho, const ShotConfig& cfg);
double lambda_d_ideal(const DensityMatrix& rho);

struct Table1 {
  ShotConfig cfg;
  std::array<double, 4> th{};
  std::array<double, 4> exp{};
  std::array<double, 4> d{};
};

// Columns follow kAllBellKinds.
Table1 run_table1(const ShotConfig& cfg);
Report table1_report(const Table1& table);

struct Fig3Row {
  std::string series;  // "nine", "werner" or "mems"
  double p = 0.0;
  std::optional<double> alpha;
  double tangle = 0.0;
  double linear_entropy = 0.0;
  double lambda_th = 0.0;
  double lambda_d_ideal = 0.0;
  double lambda_d_sampled = 0.0;
  Verdict verdict = Verdict::Undetected;  // from lambda_th
};

inline constexpr std::size_t kCurvePoints = 21;

// Nine family states followed by Werner and MEMS curves on p = 0, 0.05, ..., 1.
std::vector<Fig3Row> run_fig3(const ShotConfig& cfg);
Report fig3_report(const std::vector<Fig3Row>& rows, const ShotConfig& cfg);

}  // namespace spapt
