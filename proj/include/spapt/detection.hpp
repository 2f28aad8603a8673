#pragma once

#include <cstdint>
#include <string_view>

#include "spapt/qmath.hpp"
#include "spapt/states.hpp"
#include "spapt/tomography.hpp"

namespace spapt {

inline constexpr double kSpaThreshold = 2.0 / 9.0;
inline constexpr double kPptThreshold = 0.0;
// Minimum eigenvalues this close below the threshold count as on the boundary.
inline constexpr double kVerdictTolerance = 1e-12;

enum class Method { Ppt, SpaSpectrum, FHat };
enum class Verdict { Entangled, Undetected };

std::string_view to_string(Method method);
std::string_view to_string(Verdict verdict);
// "ppt", "spa_spectrum", "f_hat"
Method parse_method(std::string_view name);

struct DetectionVerdict {
  double lambda_min = 0.0;
  double threshold = 0.0;
  Method method = Method::Ppt;
  Verdict verdict = Verdict::Undetected;
  std::uint64_t shots = 0;

  double margin() const { return lambda_min - threshold; }
};

// Which operators the F-hat skeleton
//   (1/3) sum_ij p_ij A_i (x) B_j + (1/3) sum_k C_k (x) (q_k E0 + r_k E1)
// is assembled from.
enum class FHatForm {
  // A_i = dual frame of {|t_i><t_i|}, B_j = |v_j><v_j|, C_k = sigma_y|v_k><v_k|sigma_y,
  // E0 = E1 = I. On exact probabilities this equals the SPA-PT output state.
  Reconstructed,
  // A_i = |t_i><t_i|, B_j = C_j = M_j, E0 = |0><0|, E1 = |1><1|, taken literally.
  Printed,
};

struct FHatOperator {
  ComplexMatrix mat;  // 4x4 Hermitian
};

FHatOperator f_hat(const ProbabilityTable& table, FHatForm form = FHatForm::Reconstructed);
// Smallest eigenvalue via the Hermitian eigensolver.
double lambda_min_d(const FHatOperator& f);
// Smallest root of det(F - kappa I), located by sign changes of the characteristic
// polynomial on a kappa grid and refined by bisection. Throws NumericError if the
// grid finds no sign change or the smallest root is degenerate.
double lambda_min_det_scan(const FHatOperator& f, std::size_t grid_points = 4096);
// Coefficients c[0..4] of det(kappa I - F) = sum_k c[k] kappa^k.
std::array<double, 5> characteristic_polynomial(const ComplexMatrix& m);

DetectionVerdict make_verdict(double lambda_min, Method method, std::uint64_t shots);

// Ppt and SpaSpectrum use the state directly; FHat builds the ideal table.
DetectionVerdict detect(const DensityMatrix& rho, Method method,
                        FHatForm form = FHatForm::Reconstructed);
// FHat from measured (or ideal) statistics.
DetectionVerdict detect(const ProbabilityTable& table, FHatForm form = FHatForm::Reconstructed);

// Projector Q onto the eigenvector of (1 (x) T)(rho) with the smallest eigenvalue;
// (1 (x) T)(Q) is then a witness tailored to rho.
ComplexMatrix detecting_projector(const DensityMatrix& rho);

// tr[(1 (x) T)(Q) rho] for a rank-1 projector Q.
double witness_expectation(const DensityMatrix& rho, const ComplexMatrix& q_projector);

}  // namespace spapt
