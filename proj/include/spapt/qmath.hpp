#pragma once

// Dense complex linear algebra for one- and two-qubit operators.
//
// Conventions used throughout the library:
//   |0> = |H>, |1> = |V>; two-qubit index |ab> = 2*a + b with A the left factor.
//   Matrices are stored row-major.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spapt {

using complex = std::complex<double>;
using Ket = std::vector<complex>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  // Throws InvalidInput unless entries.size() == dim * dim.
  ComplexMatrix(std::size_t dim, std::vector<complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  // |k><k| (no normalization applied).
  static ComplexMatrix projector(std::span<const complex> ket);
  // |a><b|
  static ComplexMatrix outer(std::span<const complex> a, std::span<const complex> b);

  std::size_t dim() const { return dim_; }
  complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const complex> entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(complex scale);

 private:
  std::size_t dim_ = 0;
  std::vector<complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, complex scale);
Ket operator*(const ComplexMatrix& m, std::span<const complex> ket);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
complex trace(const ComplexMatrix& m);
// Block (i,j) of the result is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Ket kron(std::span<const complex> a, std::span<const complex> b);

// <a|b>, antilinear in a.
complex inner(std::span<const complex> a, std::span<const complex> b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_defect(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
// (m + m^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
const ComplexMatrix& pauli(std::size_t index);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::vector<Ket> eigenvectors;    // eigenvectors[k] pairs with eigenvalues[k]

  ComplexMatrix reconstruct() const;
};

inline constexpr double kHermitianTolerance = 1e-9;
inline constexpr double kPsdTolerance = 1e-9;
inline constexpr std::size_t kMaxEigenDim = 16;

// Cyclic complex Jacobi. Requires dim <= 16 and hermiticity defect <= 1e-9.
Spectrum herm_eig(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);

// Spectral square root. Eigenvalues in [-1e-9, 0) are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

enum class Subsystem { A, B };

// Transposes subsystem B of a 2x2 bipartite operator.
ComplexMatrix partial_transpose(const ComplexMatrix& m);
// Reduced 2x2 operator on `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep);
// General bipartite version: m acts on C^dim_a (x) C^dim_b.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

}  // namespace spapt
