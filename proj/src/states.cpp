#include "spapt/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spapt/errors.hpp"

namespace spapt {

namespace {

void require_unit_interval(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InvalidInput(std::string(what) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

void require_two_qubit(const DensityMatrix& rho, const char* op) {
  if (rho.dim() != 4) {
    throw UnsupportedDimension(std::string(op) + ": requires a two-qubit state");
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (mat_.dim() != 2 && mat_.dim() != 4) {
    throw UnsupportedDimension("density matrix: dimension must be 2 or 4, got " +
                               std::to_string(mat_.dim()));
  }
  for (const complex& e : mat_.entries()) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw InvalidInput("density matrix: entries must be finite");
    }
  }
  const double defect = hermiticity_defect(mat_);
  if (defect > kHermitianTolerance) {
    throw InvalidInput("density matrix: not Hermitian (max |m - m^dagger| = " +
                       std::to_string(defect) + ")");
  }
  const complex tr = trace(mat_);
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw InvalidInput("density matrix: trace must be 1 (got " + std::to_string(tr.real()) +
                       ")");
  }
  const double lowest = spapt::min_eigenvalue(mat_);
  if (lowest < -kPsdTolerance) {
    throw NotPositiveSemidefinite("density matrix: not positive semidefinite (min eigenvalue " +
                                  std::to_string(lowest) + ")");
  }
}

PureState::PureState(Ket amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() != 2 && amps_.size() != 4) {
    throw UnsupportedDimension("pure state: dimension must be 2 or 4");
  }
  const double norm = std::sqrt(std::real(inner(amps_, amps_)));
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw InvalidInput("pure state: norm must be 1 (got " + std::to_string(norm) + ")");
  }
}

PureState PureState::normalized(Ket amplitudes) {
  const double norm = std::sqrt(std::real(inner(amplitudes, amplitudes)));
  if (!(norm > 0.0)) throw InvalidInput("pure state: cannot normalize a zero vector");
  for (auto& amp : amplitudes) amp /= norm;
  return PureState(std::move(amplitudes));
}

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
  }
  return "?";
}

BellKind parse_bell_kind(std::string_view name) {
  for (BellKind kind : kAllBellKinds) {
    if (name == to_string(kind)) return kind;
  }
  throw InvalidInput("unknown Bell state '" + std::string(name) +
                     "' (expected phi+, phi-, psi+ or psi-)");
}

PureState bell_vector(BellKind kind) {
  const double h = std::numbers::sqrt2 / 2.0;
  switch (kind) {
    case BellKind::PhiPlus: return PureState::normalized({h, 0.0, 0.0, h});
    case BellKind::PhiMinus: return PureState::normalized({h, 0.0, 0.0, -h});
    case BellKind::PsiPlus: return PureState::normalized({0.0, h, h, 0.0});
    case BellKind::PsiMinus: return PureState::normalized({0.0, h, -h, 0.0});
  }
  throw InvalidInput("unknown Bell kind");
}

DensityMatrix bell(BellKind kind) { return bell_vector(kind).density(); }

DensityMatrix maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * complex(1.0 / static_cast<double>(dim)));
}

DensityMatrix product_basis_state(int a, int b) {
  if ((a != 0 && a != 1) || (b != 0 && b != 1)) {
    throw InvalidInput("product_basis_state: qubit labels must be 0 or 1");
  }
  Ket ket(4);
  ket[static_cast<std::size_t>(2 * a + b)] = 1.0;
  return PureState(std::move(ket)).density();
}

DensityMatrix werner(double p) {
  require_unit_interval(p, "werner: p");
  ComplexMatrix rho = complex(p / 4.0) * ComplexMatrix::identity(4);
  rho += complex(1.0 - p) * bell_vector(BellKind::PsiMinus).projector();
  return DensityMatrix(std::move(rho));
}

DensityMatrix mems(double p) {
  require_unit_interval(p, "mems: p");
  const double f = p >= 2.0 / 3.0 ? p / 2.0 : 1.0 / 3.0;
  ComplexMatrix rho(4);
  rho(0, 0) = f;
  rho(3, 3) = f;
  rho(0, 3) = p / 2.0;
  rho(3, 0) = p / 2.0;
  rho(1, 1) = 1.0 - 2.0 * f;
  return DensityMatrix(std::move(rho));
}

DensityMatrix family_rho(double p, double alpha) {
  require_unit_interval(p, "family_rho: p");
  require_unit_interval(alpha, "family_rho: alpha");
  const double beta = std::sqrt(1.0 - alpha * alpha);
  const PureState psi = PureState::normalized({0.0, alpha, -beta, 0.0});
  const PureState perp = PureState::normalized({0.0, beta, alpha, 0.0});
  ComplexMatrix rho = complex(1.0 - p) * psi.projector() + complex(p) * perp.projector();
  return DensityMatrix(hermitian_part(rho));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidInput("fidelity: dimension mismatch");
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  const ComplexMatrix inner_product = hermitian_part(root * sigma.matrix() * root);
  double sum = 0.0;
  for (double value : herm_eig(inner_product).eigenvalues) sum += std::sqrt(std::max(value, 0.0));
  return std::clamp(sum * sum, 0.0, 1.0);
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho, "concurrence");
  const ComplexMatrix yy = kron(pauli(2), pauli(2));
  const ComplexMatrix flipped = yy * conjugate(rho.matrix()) * yy;
  // rho * flipped shares its spectrum with sqrt(rho) flipped sqrt(rho), which is Hermitian PSD.
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  const ComplexMatrix r = hermitian_part(root * flipped * root);
  std::vector<double> values = herm_eig(r).eigenvalues;
  for (double& v : values) v = std::sqrt(std::max(v, 0.0));
  std::sort(values.begin(), values.end(), std::greater<>());
  return std::max(0.0, values[0] - values[1] - values[2] - values[3]);
}

double tangle(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  return std::clamp(c * c, 0.0, 1.0);
}

double purity(const DensityMatrix& rho) {
  return std::real(trace(rho.matrix() * rho.matrix()));
}

double linear_entropy(const DensityMatrix& rho) {
  require_two_qubit(rho, "linear_entropy");
  return std::clamp(4.0 / 3.0 * (1.0 - purity(rho)), 0.0, 1.0);
}

double min_eigenvalue(const DensityMatrix& rho) { return spapt::min_eigenvalue(rho.matrix()); }

}  // namespace spapt
