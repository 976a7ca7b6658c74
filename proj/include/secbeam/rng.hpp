#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace secbeam {

using Rng = std::mt19937_64;

// Derives an independent stream seed from a master seed (splitmix64 step).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Circularly symmetric complex Gaussian with unit variance, E|g|^2 = 1.
inline std::complex<double> complex_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  double re = n(rng);
  double im = n(rng);
  return {re, im};
}

}  // namespace secbeam
