#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "uent/gates.hpp"
#include "uent/states.hpp"

namespace uent {

// Addresses one reproducible random stream: the same key always yields the
// same draws, and distinct stream indices give statistically independent
// streams under one master seed.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

// One step of the splitmix64 sequence (advances the state).
std::uint64_t splitmix64_next(std::uint64_t& state);

// Stateless mix of two words into a well-scrambled seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Fully specified generator wrapper: mt19937_64 plus the exact variate
// recipes (53-bit uniforms, polar Gaussian pairs, unbiased integers), so
// identical seeds give bit-identical streams on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  double uniform01();                       // [0, 1) with 53 random bits
  double uniform_sym();                     // [-1, 1)
  std::pair<double, double> gauss_pair();   // two independent N(0,1) draws
  std::uint64_t below(std::uint64_t n);     // uniform on {0, ..., n-1}, unbiased

 private:
  std::mt19937_64 eng_;
};

// Haar-random pure state: d complex amplitudes with independent standard
// Gaussian parts, then normalized.
PureState haar_state(int d, StreamKey key);

// Independent Haar factors on C^m and C^n (derived substreams of the key).
ProductState random_product_state(const BipartiteShape& shape, StreamKey key);

// Haar-random unitary: QR of a complex Ginibre matrix via modified
// Gram-Schmidt with a second orthogonalization pass; the R diagonal is
// positive by construction, which fixes the phase convention.
UnitaryGate haar_unitary(int d, StreamKey key);

}  // namespace uent
