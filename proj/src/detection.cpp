#include "spapt/detection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "spapt/channels.hpp"
#include "spapt/errors.hpp"

namespace spapt {

namespace {

using Real4x4 = std::array<std::array<double, 4>, 4>;

Real4x4 invert(Real4x4 m) {
  Real4x4 inv{};
  for (std::size_t i = 0; i < 4; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < 4; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    if (std::abs(m[pivot][col]) < 1e-12) throw NumericError("Gram matrix is singular");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    const double scale = 1.0 / m[col][col];
    for (std::size_t k = 0; k < 4; ++k) {
      m[col][k] *= scale;
      inv[col][k] *= scale;
    }
    for (std::size_t row = 0; row < 4; ++row) {
      if (row == col) continue;
      const double factor = m[row][col];
      for (std::size_t k = 0; k < 4; ++k) {
        m[row][k] -= factor * m[col][k];
        inv[row][k] -= factor * inv[col][k];
      }
    }
  }
  return inv;
}

// Operators D_i with tr[D_i |t_j><t_j|] = delta_ij.
const std::array<ComplexMatrix, 4>& tomo_dual_frame() {
  static const std::array<ComplexMatrix, 4> kDual = [] {
    const auto basis = tomo_basis();
    std::array<ComplexMatrix, 4> projectors;
    for (std::size_t i = 0; i < 4; ++i) projectors[i] = basis[i].projector();
    Real4x4 gram{};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        gram[i][j] = std::real(trace(projectors[i] * projectors[j]));
      }
    }
    const Real4x4 inverse = invert(gram);
    std::array<ComplexMatrix, 4> dual;
    for (std::size_t i = 0; i < 4; ++i) {
      dual[i] = ComplexMatrix(2);
      for (std::size_t j = 0; j < 4; ++j) dual[i] += complex(inverse[i][j]) * projectors[j];
    }
    return dual;
  }();
  return kDual;
}

double evaluate(const std::array<double, 5>& c, double x) {
  double value = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) value = value * x + c[k];
  return value;
}

// Cholesky test of m - shift*I.
bool positive_definite_below(const ComplexMatrix& m, double shift) {
  const std::size_t n = m.dim();
  std::vector<complex> l(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = m(j, j).real() - shift;
    for (std::size_t k = 0; k < j; ++k) diag -= std::norm(l[j * n + k]);
    if (!(diag > 0.0)) return false;
    l[j * n + j] = std::sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      complex sum = m(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= l[i * n + k] * std::conj(l[j * n + k]);
      l[i * n + j] = sum / l[j * n + j];
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Ppt: return "ppt";
    case Method::SpaSpectrum: return "spa_spectrum";
    case Method::FHat: return "f_hat";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::Entangled ? "entangled" : "undetected";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::Ppt, Method::SpaSpectrum, Method::FHat}) {
    if (name == to_string(m)) return m;
  }
  throw InvalidInput("unknown detection method '" + std::string(name) + "'");
}

FHatOperator f_hat(const ProbabilityTable& table, FHatForm form) {
  table.validate();
  const auto povm = spa_povm();
  const auto vs = v_states();
  const auto basis = tomo_basis();
  const ComplexMatrix id2 = ComplexMatrix::identity(2);

  std::array<ComplexMatrix, 4> a_ops, b_ops, c_ops;
  ComplexMatrix e0, e1;
  if (form == FHatForm::Reconstructed) {
    a_ops = tomo_dual_frame();
    for (std::size_t k = 0; k < 4; ++k) {
      b_ops[k] = vs[k].projector();
      c_ops[k] = pauli(2) * vs[k].projector() * pauli(2);
    }
    e0 = id2;
    e1 = id2;
  } else {
    for (std::size_t k = 0; k < 4; ++k) {
      a_ops[k] = basis[k].projector();
      b_ops[k] = povm[k];
      c_ops[k] = povm[k];
    }
    e0 = ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}};
    e1 = ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}};
  }

  ComplexMatrix f(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) f += complex(table.p[i][j] / 3.0) * kron(a_ops[i], b_ops[j]);
  }
  for (std::size_t k = 0; k < 4; ++k) {
    f += complex(1.0 / 3.0) * kron(c_ops[k], complex(table.q[k]) * e0 + complex(table.r[k]) * e1);
  }
  return FHatOperator{hermitian_part(f)};
}

double lambda_min_d(const FHatOperator& f) { return spapt::min_eigenvalue(f.mat); }

std::array<double, 5> characteristic_polynomial(const ComplexMatrix& m) {
  if (m.dim() != 4) throw UnsupportedDimension("characteristic_polynomial: expected 4x4");
  // Faddeev-LeVerrier.
  std::array<complex, 5> c{};
  c[4] = 1.0;
  ComplexMatrix previous(4);
  for (std::size_t k = 1; k <= 4; ++k) {
    const ComplexMatrix current = m * previous + c[4 - k + 1] * ComplexMatrix::identity(4);
    c[4 - k] = -trace(m * current) / static_cast<double>(k);
    previous = current;
  }
  std::array<double, 5> out{};
  for (std::size_t k = 0; k < 5; ++k) out[k] = c[k].real();
  return out;
}

double lambda_min_det_scan(const FHatOperator& f, std::size_t grid_points) {
  if (grid_points < 2) throw InvalidInput("lambda_min_det_scan: need at least 2 grid points");
  const ComplexMatrix& m = f.mat;
  // Gershgorin interval contains every eigenvalue.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < 4; ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != i) radius += std::abs(m(i, j));
    }
    lo = std::min(lo, m(i, i).real() - radius);
    hi = std::max(hi, m(i, i).real() + radius);
  }
  const double pad = 1e-6 * std::max(1.0, hi - lo);
  lo -= pad;
  hi += pad;

  const auto poly = characteristic_polynomial(m);
  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  double x0 = lo;
  double y0 = evaluate(poly, x0);
  for (std::size_t g = 1; g < grid_points; ++g) {
    const double x1 = lo + step * static_cast<double>(g);
    const double y1 = evaluate(poly, x1);
    if (y0 == 0.0) return x0;
    if ((y0 < 0.0) != (y1 < 0.0)) {
      double a = x0, b = x1, ya = y0;
      for (int iter = 0; iter < 200 && b - a > 1e-15; ++iter) {
        const double mid = 0.5 * (a + b);
        const double ym = evaluate(poly, mid);
        if (ym == 0.0) return mid;
        if ((ym < 0.0) == (ya < 0.0)) {
          a = mid;
          ya = ym;
        } else {
          b = mid;
        }
      }
      const double root = 0.5 * (a + b);
      // A double root below `root` touches zero without crossing; rule it out.
      if (!positive_definite_below(m, root - 1e-9 * std::max(1.0, hi - lo))) {
        throw NumericError("lambda_min_det_scan: smallest root is degenerate");
      }
      return root;
    }
    x0 = x1;
    y0 = y1;
  }
  throw NumericError("lambda_min_det_scan: no sign change of det(F - kappa I) on the grid");
}

DetectionVerdict make_verdict(double lambda_min, Method method, std::uint64_t shots) {
  DetectionVerdict v;
  v.lambda_min = lambda_min;
  v.method = method;
  v.threshold = method == Method::Ppt ? kPptThreshold : kSpaThreshold;
  v.verdict = lambda_min < v.threshold - kVerdictTolerance ? Verdict::Entangled : Verdict::Undetected;
  v.shots = shots;
  return v;
}

DetectionVerdict detect(const DensityMatrix& rho, Method method, FHatForm form) {
  if (rho.dim() != 4) throw UnsupportedDimension("detect: requires a two-qubit state");
  switch (method) {
    case Method::Ppt:
      return make_verdict(spapt::min_eigenvalue(ideal_pt(rho)), method, 0);
    case Method::SpaSpectrum:
      return make_verdict(min_eigenvalue(apply(spa_pt(), rho)), method, 0);
    case Method::FHat:
      return detect(ideal_probabilities(rho), form);
  }
  throw InvalidInput("detect: unknown method");
}

DetectionVerdict detect(const ProbabilityTable& table, FHatForm form) {
  return make_verdict(lambda_min_d(f_hat(table, form)), Method::FHat, table.shots_per_setting);
}

ComplexMatrix detecting_projector(const DensityMatrix& rho) {
  const Spectrum spectrum = herm_eig(ideal_pt(rho));
  return ComplexMatrix::projector(spectrum.eigenvectors.front());
}

double witness_expectation(const DensityMatrix& rho, const ComplexMatrix& q_projector) {
  if (rho.dim() != 4 || q_projector.dim() != 4) {
    throw UnsupportedDimension("witness_expectation: two-qubit operators required");
  }
  if (hermiticity_defect(q_projector) > kHermitianTolerance ||
      max_abs_diff(q_projector * q_projector, q_projector) > kHermitianTolerance ||
      std::abs(trace(q_projector) - 1.0) > kHermitianTolerance) {
    throw InvalidInput("witness_expectation: Q must be a rank-1 projector");
  }
  const ComplexMatrix witness = partial_transpose(q_projector);
  return std::real(trace(witness * rho.matrix()));
}

}  // namespace spapt
