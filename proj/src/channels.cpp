#include "spapt/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spapt/errors.hpp"

namespace spapt {

namespace {

ComplexMatrix unit_matrix(std::size_t dim, std::size_t row, std::size_t col) {
  ComplexMatrix e(dim);
  e(row, col) = 1.0;
  return e;
}

std::vector<complex> vec(const ComplexMatrix& x) {
  const std::size_t d = x.dim();
  std::vector<complex> out(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) out[i + j * d] = x(i, j);
  }
  return out;
}

ComplexMatrix unvec(std::span<const complex> v, std::size_t d) {
  ComplexMatrix x(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) x(i, j) = v[i + j * d];
  }
  return x;
}

Superoperator superoperator_of(const QuantumChannel::Representation& rep) {
  struct Visitor {
    Superoperator operator()(const KrausChannel& k) const {
      if (k.operators.empty()) throw InvalidInput("Kraus channel: no operators");
      const std::size_t d = k.operators.front().dim();
      for (const auto& op : k.operators) {
        if (op.dim() != d) throw InvalidInput("Kraus channel: operators differ in dimension");
      }
      return Superoperator::from_map(d, d, [&](const ComplexMatrix& x) {
        ComplexMatrix out(d);
        for (const auto& op : k.operators) out += op * x * adjoint(op);
        return out;
      });
    }
    Superoperator operator()(const MeasurePrepareChannel& mp) const {
      const std::size_t d = mp.povm().front().dim();
      return Superoperator::from_map(d, d, [&](const ComplexMatrix& x) { return mp.apply(x); });
    }
    Superoperator operator()(const Superoperator& s) const { return s; }
  };
  return std::visit(Visitor{}, rep);
}

void certify_physical(const Superoperator& s) {
  const double lowest = choi_min_eigenvalue(s);
  if (lowest < -kChannelTolerance) {
    throw InvalidInput("channel is not completely positive (Choi min eigenvalue " +
                       std::to_string(lowest) + ")");
  }
  if (!is_tp(s)) throw InvalidInput("channel is not trace preserving");
}

}  // namespace

Superoperator::Superoperator(std::size_t dim_in, std::size_t dim_out, ComplexMatrix mat)
    : dim_in_(dim_in), dim_out_(dim_out), mat_(std::move(mat)) {
  if (dim_in_ != dim_out_) {
    throw UnsupportedDimension("superoperator: only maps with equal input and output dimension");
  }
  if (mat_.dim() != dim_in_ * dim_in_) {
    throw InvalidInput("superoperator: matrix must be dim^2 x dim^2");
  }
}

Superoperator Superoperator::from_map(
    std::size_t dim_in, std::size_t dim_out,
    const std::function<ComplexMatrix(const ComplexMatrix&)>& map) {
  const std::size_t rows = dim_out * dim_out;
  ComplexMatrix mat(dim_in * dim_in);
  if (rows != mat.dim()) {
    throw UnsupportedDimension("superoperator: only maps with equal input and output dimension");
  }
  for (std::size_t j = 0; j < dim_in; ++j) {
    for (std::size_t i = 0; i < dim_in; ++i) {
      const ComplexMatrix image = map(unit_matrix(dim_in, i, j));
      if (image.dim() != dim_out) throw InvalidInput("superoperator: map output has wrong size");
      const std::vector<complex> column = vec(image);
      for (std::size_t r = 0; r < rows; ++r) mat(r, i + j * dim_in) = column[r];
    }
  }
  return Superoperator(dim_in, dim_out, std::move(mat));
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& x) const {
  if (x.dim() != dim_in_) throw InvalidInput("superoperator: input dimension mismatch");
  const std::vector<complex> in = vec(x);
  return unvec(mat_ * std::span<const complex>(in), dim_out_);
}

Superoperator operator+(const Superoperator& a, const Superoperator& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw InvalidInput("superoperator sum: dimension mismatch");
  }
  return Superoperator(a.dim_in(), a.dim_out(), a.matrix() + b.matrix());
}

Superoperator operator*(double weight, const Superoperator& s) {
  return Superoperator(s.dim_in(), s.dim_out(), complex(weight) * s.matrix());
}

Superoperator tensor(const Superoperator& a, const Superoperator& b) {
  const std::size_t da = a.dim_in();
  const std::size_t db = b.dim_in();
  const std::size_t d = da * db;
  return Superoperator::from_map(d, d, [&](const ComplexMatrix& x) {
    // Expand x over product matrix units E_ab (x) E_cd.
    ComplexMatrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        if (x(r, c) == complex{}) continue;
        const ComplexMatrix left = a.apply(unit_matrix(da, r / db, c / db));
        const ComplexMatrix right = b.apply(unit_matrix(db, r % db, c % db));
        out += x(r, c) * kron(left, right);
      }
    }
    return out;
  });
}

double max_abs_diff(const Superoperator& a, const Superoperator& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

MeasurePrepareChannel::MeasurePrepareChannel(std::vector<ComplexMatrix> povm,
                                             std::vector<PureState> prepared)
    : povm_(std::move(povm)), prepared_(std::move(prepared)) {
  if (povm_.empty() || povm_.size() != prepared_.size()) {
    throw InvalidInput("measure-prepare channel: need one prepared state per POVM effect");
  }
  const std::size_t d = povm_.front().dim();
  ComplexMatrix total(d);
  for (std::size_t k = 0; k < povm_.size(); ++k) {
    if (povm_[k].dim() != d || prepared_[k].dim() != d) {
      throw InvalidInput("measure-prepare channel: inconsistent dimensions");
    }
    if (hermiticity_defect(povm_[k]) > kPovmTolerance ||
        spapt::min_eigenvalue(povm_[k]) < -kPovmTolerance) {
      throw InvalidInput("measure-prepare channel: effect " + std::to_string(k) +
                         " is not positive semidefinite");
    }
    total += povm_[k];
  }
  if (max_abs_diff(total, ComplexMatrix::identity(d)) > kPovmTolerance) {
    throw InvalidInput("measure-prepare channel: effects do not sum to the identity");
  }
}

ComplexMatrix MeasurePrepareChannel::apply(const ComplexMatrix& x) const {
  ComplexMatrix out(x.dim());
  for (std::size_t k = 0; k < povm_.size(); ++k) {
    out += trace(povm_[k] * x) * prepared_[k].projector();
  }
  return out;
}

QuantumChannel::QuantumChannel(KrausChannel kraus)
    : rep_(std::move(kraus)), superop_(superoperator_of(rep_)) {
  certify_physical(superop_);
}

QuantumChannel::QuantumChannel(MeasurePrepareChannel mp)
    : rep_(std::move(mp)), superop_(superoperator_of(rep_)) {
  certify_physical(superop_);
}

QuantumChannel::QuantumChannel(Superoperator superop)
    : rep_(superop), superop_(std::move(superop)) {
  certify_physical(superop_);
}

ChoiMatrix choi(const Superoperator& map) {
  const std::size_t din = map.dim_in();
  const std::size_t dout = map.dim_out();
  ComplexMatrix mat(din * dout);
  for (std::size_t i = 0; i < din; ++i) {
    for (std::size_t j = 0; j < din; ++j) {
      const ComplexMatrix e = unit_matrix(din, i, j);
      mat += kron(map.apply(e), e);
    }
  }
  mat *= complex(1.0 / static_cast<double>(din));
  return ChoiMatrix{std::move(mat), din, dout};
}

double choi_min_eigenvalue(const Superoperator& map) {
  return spapt::min_eigenvalue(hermitian_part(choi(map).mat));
}

bool is_cp(const Superoperator& map) {
  const ChoiMatrix c = choi(map);
  if (hermiticity_defect(c.mat) > kChannelTolerance) return false;
  return spapt::min_eigenvalue(hermitian_part(c.mat)) >= -kChannelTolerance;
}

bool is_tp(const Superoperator& map) {
  const ChoiMatrix c = choi(map);
  const ComplexMatrix unnormalized = complex(static_cast<double>(c.dim_in)) * c.mat;
  const ComplexMatrix reduced = partial_trace(unnormalized, c.dim_out, c.dim_in, Subsystem::B);
  return max_abs_diff(reduced, ComplexMatrix::identity(c.dim_in)) <= kChannelTolerance;
}

DensityMatrix apply(const QuantumChannel& ch, const DensityMatrix& rho) {
  if (ch.dim_in() != rho.dim()) throw InvalidInput("apply: channel and state dimensions differ");
  return DensityMatrix(hermitian_part(ch.superoperator().apply(rho.matrix())));
}

Superoperator identity_map(std::size_t dim) {
  return Superoperator::from_map(dim, dim, [](const ComplexMatrix& x) { return x; });
}

Superoperator transpose_map(std::size_t dim) {
  return Superoperator::from_map(dim, dim, [](const ComplexMatrix& x) { return transpose(x); });
}

Superoperator replace_map(std::size_t dim) {
  return Superoperator::from_map(dim, dim, [dim](const ComplexMatrix& x) {
    return trace(x) / static_cast<double>(dim) * ComplexMatrix::identity(dim);
  });
}

Superoperator ideal_pt_map() {
  return Superoperator::from_map(4, 4, [](const ComplexMatrix& x) { return partial_transpose(x); });
}

std::array<PureState, 4> v_states() {
  using std::numbers::pi;
  const complex i(0.0, 1.0);
  const complex numerator = i * std::polar(1.0, 2.0 * pi / 3.0);
  const complex conj_phase = std::polar(1.0, -2.0 * pi / 3.0);
  const complex a = numerator / (i + conj_phase);
  const complex b = numerator / (i - conj_phase);
  // |0> amplitude is 1 before normalization, hence already real positive.
  return {PureState::normalized({1.0, a}), PureState::normalized({1.0, -b}),
          PureState::normalized({1.0, b}), PureState::normalized({1.0, -a})};
}

std::vector<ComplexMatrix> spa_povm() {
  std::vector<ComplexMatrix> povm;
  for (const PureState& v : v_states()) {
    const Ket conj_v = {std::conj(v[0]), std::conj(v[1])};
    povm.push_back(0.5 * ComplexMatrix::projector(conj_v));
  }
  return povm;
}

MeasurePrepareChannel spa_transpose() {
  const auto vs = v_states();
  return MeasurePrepareChannel(spa_povm(), std::vector<PureState>(vs.begin(), vs.end()));
}

MeasurePrepareChannel spa_inversion() {
  std::vector<PureState> prepared;
  for (const PureState& v : v_states()) {
    prepared.push_back(PureState::normalized(pauli(2) * std::span<const complex>(v.amplitudes())));
  }
  return MeasurePrepareChannel(spa_povm(), std::move(prepared));
}

QuantumChannel depolarize() {
  KrausChannel kraus;
  for (std::size_t i = 0; i < 4; ++i) kraus.operators.push_back(0.5 * pauli(i));
  return QuantumChannel(std::move(kraus));
}

QuantumChannel identity_channel(std::size_t dim) {
  return QuantumChannel(KrausChannel{{ComplexMatrix::identity(dim)}});
}

std::array<SpaPtBranch, 2> spa_pt_branches() {
  return {SpaPtBranch{1.0 / 3.0, identity_channel(2), QuantumChannel(spa_transpose())},
          SpaPtBranch{2.0 / 3.0, QuantumChannel(spa_inversion()), depolarize()}};
}

QuantumChannel spa_pt() {
  static const QuantumChannel kChannel = [] {
    const auto branches = spa_pt_branches();
    Superoperator total(4, 4, ComplexMatrix(16));
    for (const auto& branch : branches) {
      total = total + branch.weight * tensor(branch.on_a.superoperator(),
                                             branch.on_b.superoperator());
    }
    return QuantumChannel(std::move(total));
  }();
  return kChannel;
}

ComplexMatrix ideal_pt(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw UnsupportedDimension("ideal_pt: requires a two-qubit state");
  return partial_transpose(rho.matrix());
}

}  // namespace spapt
