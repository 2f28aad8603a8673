#pragma once

// Quantum channels and the measure-and-prepare decomposition of the
// structural physical approximation of the partial transpose (SPA-PT).
//
// Superoperators act on column-stacked matrices: vec(X)[i + j*d] = X(i, j).

#include <array>
#include <functional>
#include <variant>
#include <vector>

#include "spapt/qmath.hpp"
#include "spapt/states.hpp"

namespace spapt {

inline constexpr double kPovmTolerance = 1e-10;
inline constexpr double kChannelTolerance = 1e-9;

// Linear map on operators, not necessarily physical.
class Superoperator {
 public:
  Superoperator(std::size_t dim_in, std::size_t dim_out, ComplexMatrix mat);
  // Builds the matrix by applying `map` to each matrix unit E_ij.
  static Superoperator from_map(std::size_t dim_in, std::size_t dim_out,
                                const std::function<ComplexMatrix(const ComplexMatrix&)>& map);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const ComplexMatrix& matrix() const { return mat_; }

  ComplexMatrix apply(const ComplexMatrix& x) const;

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  // (dim_out^2) x (dim_in^2); stored square since only dim_in == dim_out maps are used.
  ComplexMatrix mat_;
};

Superoperator operator+(const Superoperator& a, const Superoperator& b);
Superoperator operator*(double weight, const Superoperator& s);
// (a (x) b)(X (x) Y) = a(X) (x) b(Y)
Superoperator tensor(const Superoperator& a, const Superoperator& b);
double max_abs_diff(const Superoperator& a, const Superoperator& b);

struct KrausChannel {
  std::vector<ComplexMatrix> operators;
};

// Outcome k of `povm` prepares `prepared[k]`. Effects must be PSD and sum to I within 1e-10.
class MeasurePrepareChannel {
 public:
  MeasurePrepareChannel(std::vector<ComplexMatrix> povm, std::vector<PureState> prepared);

  const std::vector<ComplexMatrix>& povm() const { return povm_; }
  const std::vector<PureState>& prepared() const { return prepared_; }
  std::size_t outcomes() const { return povm_.size(); }

  ComplexMatrix apply(const ComplexMatrix& x) const;

 private:
  std::vector<ComplexMatrix> povm_;
  std::vector<PureState> prepared_;
};

// A CPTP map. Construction certifies complete positivity and trace preservation
// through the Choi matrix; non-physical maps stay as bare Superoperators.
class QuantumChannel {
 public:
  using Representation = std::variant<KrausChannel, MeasurePrepareChannel, Superoperator>;

  explicit QuantumChannel(KrausChannel kraus);
  explicit QuantumChannel(MeasurePrepareChannel mp);
  explicit QuantumChannel(Superoperator superop);

  std::size_t dim_in() const { return superop_.dim_in(); }
  std::size_t dim_out() const { return superop_.dim_out(); }
  const Representation& representation() const { return rep_; }
  const Superoperator& superoperator() const { return superop_; }

 private:
  Representation rep_;
  Superoperator superop_;
};

struct ChoiMatrix {
  // (Lambda (x) 1)[|Omega><Omega|], |Omega> normalized; output factor first.
  ComplexMatrix mat;
  std::size_t dim_in;
  std::size_t dim_out;
};

ChoiMatrix choi(const Superoperator& map);
inline ChoiMatrix choi(const QuantumChannel& ch) { return choi(ch.superoperator()); }
bool is_cp(const Superoperator& map);
bool is_tp(const Superoperator& map);
double choi_min_eigenvalue(const Superoperator& map);

// Output validated as a DensityMatrix.
DensityMatrix apply(const QuantumChannel& ch, const DensityMatrix& rho);

// Basic maps.
Superoperator identity_map(std::size_t dim);
Superoperator transpose_map(std::size_t dim);
// rho -> tr(rho) I/dim
Superoperator replace_map(std::size_t dim);
// rho -> (1 (x) T)(rho) on two qubits; not completely positive.
Superoperator ideal_pt_map();

// The four tetrahedral states |v_k>, phase fixed by a real positive |0> amplitude.
std::array<PureState, 4> v_states();
// {M_k = |v_k*><v_k*| / 2}
std::vector<ComplexMatrix> spa_povm();

// SPA of the transpose: measure {M_k}, prepare |v_k>.
MeasurePrepareChannel spa_transpose();
// SPA of the inversion: measure {M_k}, prepare sigma_y|v_k>.
MeasurePrepareChannel spa_inversion();
// Kraus {sigma_i / 2}
QuantumChannel depolarize();
QuantumChannel identity_channel(std::size_t dim);

// One term of the stochastic realization: with probability `weight`, apply
// `on_a` to qubit A and `on_b` to qubit B.
struct SpaPtBranch {
  double weight;
  QuantumChannel on_a;
  QuantumChannel on_b;
};

// Branch 0: weight 1/3, (1 (x) T~). Branch 1: weight 2/3, (Theta~ (x) D).
std::array<SpaPtBranch, 2> spa_pt_branches();
// Convex mixture of the two branches as a single two-qubit channel.
QuantumChannel spa_pt();

// Partial transpose of the state; unit trace but possibly not PSD.
ComplexMatrix ideal_pt(const DensityMatrix& rho);

}  // namespace spapt
