#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "spapt/qmath.hpp"

namespace spapt {

using Rng = std::mt19937_64;

// Independent generator for (seed, stream). Streams are derived by
// SplitMix64 mixing so that any subset of streams can be replayed in any order.
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

// Draws counts for `shots` trials over `probabilities` (which must sum to ~1).
std::vector<std::uint64_t> multinomial_counts(std::span<const double> probabilities,
                                              std::uint64_t shots, Rng& rng);

// Haar-random pure state of the given dimension.
Ket random_pure_state(std::size_t dim, Rng& rng);
// Mixture of `components` Haar-random pure states with flat-Dirichlet weights.
ComplexMatrix random_mixed_state(std::size_t dim, std::size_t components, Rng& rng);
// Rz(a) Ry(b) Rz(c) with angles uniform on [0, 2pi): a waveplate-style rotation.
ComplexMatrix random_qubit_unitary(Rng& rng);
// General (non-Hermitian) matrix with standard normal real and imaginary parts.
ComplexMatrix random_matrix(std::size_t dim, Rng& rng);
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

}  // namespace spapt
