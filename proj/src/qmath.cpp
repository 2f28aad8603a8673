#include "spapt/qmath.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "spapt/errors.hpp"

namespace spapt {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw InvalidInput(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                       " vs " + std::to_string(b.dim()) + ")");
  }
}

constexpr double kJacobiThreshold = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (i != j) sum += std::norm(m(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw InvalidInput("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                       " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InvalidInput("ComplexMatrix: rows must form a square matrix");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const complex> ket) { return outer(ket, ket); }

ComplexMatrix ComplexMatrix::outer(std::span<const complex> a, std::span<const complex> b) {
  if (a.size() != b.size()) throw InvalidInput("outer: vector lengths differ");
  ComplexMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(complex scale, ComplexMatrix m) { return m *= scale; }
ComplexMatrix operator*(ComplexMatrix m, complex scale) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "multiply");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const complex aik = a(i, k);
      if (aik == complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Ket operator*(const ComplexMatrix& m, std::span<const complex> ket) {
  if (ket.size() != m.dim()) throw InvalidInput("matrix-vector: dimension mismatch");
  Ket out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * ket[j];
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(i, j));
  }
  return out;
}

complex trace(const ComplexMatrix& m) {
  complex sum{};
  for (std::size_t i = 0; i < m.dim(); ++i) sum += m(i, i);
  return sum;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

Ket kron(std::span<const complex> a, std::span<const complex> b) {
  Ket out;
  out.reserve(a.size() * b.size());
  for (const complex& x : a) {
    for (const complex& y : b) out.push_back(x * y);
  }
  return out;
}

complex inner(std::span<const complex> a, std::span<const complex> b) {
  if (a.size() != b.size()) throw InvalidInput("inner: vector lengths differ");
  complex sum{};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

double hermiticity_defect(const ComplexMatrix& m) { return max_abs_diff(m, adjoint(m)); }

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const complex& e : m.entries()) sum += std::norm(e);
  return std::sqrt(sum);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + adjoint(m)); }

const ComplexMatrix& pauli(std::size_t index) {
  static const std::array<ComplexMatrix, 4> kPaulis = {
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, complex(0.0, -1.0)}, {complex(0.0, 1.0), 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (index >= kPaulis.size()) throw InvalidInput("pauli: index must be 0..3");
  return kPaulis[index];
}

ComplexMatrix Spectrum::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out += eigenvalues[k] * ComplexMatrix::projector(eigenvectors[k]);
  }
  return out;
}

Spectrum herm_eig(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0 || n > kMaxEigenDim) {
    throw UnsupportedDimension("herm_eig: dimension must be in 1..16, got " + std::to_string(n));
  }
  const double defect = hermiticity_defect(m);
  if (!(defect <= kHermitianTolerance)) {
    throw InvalidInput("herm_eig: matrix is not Hermitian (defect " + std::to_string(defect) +
                       ")");
  }

  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = kJacobiThreshold * std::max(1.0, frobenius_norm(a));

  int sweep = 0;
  for (; sweep < kJacobiMaxSweeps && off_diagonal_norm(a) > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Phase the (p,q) element real, then apply a real symmetric Schur rotation.
        const complex phase = a(p, q) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complex upp = c;
        const complex upq = s;
        const complex uqp = -s * std::conj(phase);
        const complex uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const complex akp = a(k, p);
          const complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const complex apk = a(p, k);
          const complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const complex vkp = v(k, p);
          const complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }
  if (off_diagonal_norm(a) > stop) {
    throw NumericError("herm_eig: Jacobi iteration did not converge in 100 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  Spectrum spectrum;
  spectrum.eigenvalues.reserve(n);
  spectrum.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    const double value = a(k, k).real();
    if (!std::isfinite(value)) throw NumericError("herm_eig: non-finite eigenvalue");
    spectrum.eigenvalues.push_back(value);
    Ket column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = v(i, k);
    spectrum.eigenvectors.push_back(std::move(column));
  }
  return spectrum;
}

double min_eigenvalue(const ComplexMatrix& m) { return herm_eig(m).eigenvalues.front(); }

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Spectrum spectrum = herm_eig(m);
  if (spectrum.eigenvalues.front() < -kPsdTolerance) {
    throw NotPositiveSemidefinite("psd_sqrt: eigenvalue " +
                                  std::to_string(spectrum.eigenvalues.front()) +
                                  " is below -1e-9");
  }
  for (double& value : spectrum.eigenvalues) value = std::sqrt(std::max(value, 0.0));
  return spectrum.reconstruct();
}

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
  if (m.dim() != 4) {
    throw UnsupportedDimension("partial_transpose: expected a 4x4 matrix, got dim " +
                               std::to_string(m.dim()));
  }
  ComplexMatrix out(4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  if (m.dim() != dim_a * dim_b) {
    throw UnsupportedDimension("partial_trace: matrix dimension " + std::to_string(m.dim()) +
                               " does not factor as " + std::to_string(dim_a) + "x" +
                               std::to_string(dim_b));
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out(dim_a);
    for (std::size_t i = 0; i < dim_a; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) {
        for (std::size_t k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
      }
    }
    return out;
  }
  ComplexMatrix out(dim_b);
  for (std::size_t i = 0; i < dim_b; ++i) {
    for (std::size_t j = 0; j < dim_b; ++j) {
      for (std::size_t k = 0; k < dim_a; ++k) out(i, j) += m(k * dim_b + i, k * dim_b + j);
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep) {
  if (m.dim() != 4) {
    throw UnsupportedDimension("partial_trace: expected a 4x4 matrix, got dim " +
                               std::to_string(m.dim()));
  }
  return partial_trace(m, 2, 2, keep);
}

}  // namespace spapt
