#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mpschain/mps_family.hpp"

namespace mpschain {

inline constexpr std::uint64_t kDefaultSeed = 0x6d70736368ULL;

/// Deterministic random source. Draws are derived from raw mt19937_64
/// output rather than std distributions, so a seed reproduces the same
/// sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi).
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform() * static_cast<double>(hi - lo));
  }

  /// Re and im uniform in [-1, 1).
  Complex complex_in_square() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

 private:
  std::mt19937_64 engine_;
};

ComplexMatrix random_matrix(Rng& rng, int rows, int cols);
ComplexMatrix random_hermitian(Rng& rng, int side);
ComplexMatrix random_unitary(Rng& rng, int side);

/// Family with arbitrary (not condition-satisfying) tensors.
MPSFamily random_family(Rng& rng, int d, int m, int explicit_sites,
                        Tail tail = Tail::RepeatLast);

std::vector<int> random_tuple(Rng& rng, int d, int length);

}  // namespace mpschain
