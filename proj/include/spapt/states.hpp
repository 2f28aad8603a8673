#pragma once

#include <string_view>

#include "spapt/qmath.hpp"

namespace spapt {

inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-12;

// Validated quantum state: dim 2 or 4, Hermitian, unit trace and PSD, each within 1e-9.
class DensityMatrix {
 public:
  // Throws InvalidInput naming the violated invariant.
  explicit DensityMatrix(ComplexMatrix mat);

  std::size_t dim() const { return mat_.dim(); }
  const ComplexMatrix& matrix() const { return mat_; }
  complex operator()(std::size_t row, std::size_t col) const { return mat_(row, col); }

 private:
  ComplexMatrix mat_;
};

// Unit-norm state vector of dimension 2 or 4.
class PureState {
 public:
  // Rejects vectors whose norm differs from 1 by more than 1e-12.
  explicit PureState(Ket amplitudes);
  // Rescales to unit norm first.
  static PureState normalized(Ket amplitudes);

  std::size_t dim() const { return amps_.size(); }
  const Ket& amplitudes() const { return amps_; }
  complex operator[](std::size_t i) const { return amps_[i]; }
  ComplexMatrix projector() const { return ComplexMatrix::projector(amps_); }
  DensityMatrix density() const { return DensityMatrix(projector()); }

 private:
  Ket amps_;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr BellKind kAllBellKinds[] = {BellKind::PhiPlus, BellKind::PhiMinus,
                                             BellKind::PsiPlus, BellKind::PsiMinus};

std::string_view to_string(BellKind kind);
// Accepts "phi+", "phi-", "psi+", "psi-".
BellKind parse_bell_kind(std::string_view name);

PureState bell_vector(BellKind kind);
DensityMatrix bell(BellKind kind);
DensityMatrix maximally_mixed(std::size_t dim);
// |ab><ab| in the computational basis.
DensityMatrix product_basis_state(int a, int b);

// p I/4 + (1-p) |psi-><psi-|
DensityMatrix werner(double p);
// Maximally entangled mixed states with f(p) = p/2 (p >= 2/3) or 1/3 (p < 2/3).
DensityMatrix mems(double p);
// (1-p)|psi><psi| + p|psi_perp><psi_perp| with |psi> = alpha|01> - sqrt(1-alpha^2)|10>
// and |psi_perp> = sqrt(1-alpha^2)|01> + alpha|10>. alpha is real.
DensityMatrix family_rho(double p, double alpha);

// Uhlmann fidelity [tr sqrt(sqrt(rho) sigma sqrt(rho))]^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
// Squared Wootters concurrence.
double tangle(const DensityMatrix& rho);
double concurrence(const DensityMatrix& rho);
// (4/3)(1 - tr rho^2)
double linear_entropy(const DensityMatrix& rho);
double purity(const DensityMatrix& rho);
double min_eigenvalue(const DensityMatrix& rho);

}  // namespace spapt
