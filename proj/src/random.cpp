#include "spapt/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spapt/errors.hpp"

namespace spapt {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  const std::uint64_t a = splitmix64(seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

std::vector<std::uint64_t> multinomial_counts(std::span<const double> probabilities,
                                              std::uint64_t shots, Rng& rng) {
  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  double remaining_mass = 1.0;
  std::uint64_t remaining = shots;
  for (std::size_t k = 0; k < probabilities.size() && remaining > 0; ++k) {
    const double p = std::max(probabilities[k], 0.0);
    if (k + 1 == probabilities.size()) {
      counts[k] = remaining;
      break;
    }
    const double conditional = remaining_mass > 0.0 ? std::clamp(p / remaining_mass, 0.0, 1.0) : 0.0;
    std::binomial_distribution<std::uint64_t> draw(remaining, conditional);
    counts[k] = draw(rng);
    remaining -= counts[k];
    remaining_mass -= p;
  }
  return counts;
}

Ket random_pure_state(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal;
  Ket ket(dim);
  double norm = 0.0;
  for (auto& amp : ket) {
    amp = complex(normal(rng), normal(rng));
    norm += std::norm(amp);
  }
  norm = std::sqrt(norm);
  for (auto& amp : ket) amp /= norm;
  return ket;
}

ComplexMatrix random_mixed_state(std::size_t dim, std::size_t components, Rng& rng) {
  if (components == 0) throw InvalidInput("random_mixed_state: need at least one component");
  std::exponential_distribution<double> exponential(1.0);
  std::vector<double> weights(components);
  double total = 0.0;
  for (double& w : weights) {
    w = exponential(rng);
    total += w;
  }
  ComplexMatrix rho(dim);
  for (double w : weights) rho += (w / total) * ComplexMatrix::projector(random_pure_state(dim, rng));
  return hermitian_part(rho);
}

ComplexMatrix random_qubit_unitary(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  auto rz = [](double t) {
    return ComplexMatrix{{std::polar(1.0, -t / 2), 0.0}, {0.0, std::polar(1.0, t / 2)}};
  };
  auto ry = [](double t) {
    return ComplexMatrix{{std::cos(t / 2), -std::sin(t / 2)}, {std::sin(t / 2), std::cos(t / 2)}};
  };
  return rz(angle(rng)) * ry(angle(rng)) * rz(angle(rng));
}

ComplexMatrix random_matrix(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = complex(normal(rng), normal(rng));
  }
  return m;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  return hermitian_part(random_matrix(dim, rng));
}

}  // namespace spapt
