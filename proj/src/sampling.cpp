#include "uent/sampling.hpp"

#include <cmath>

#include "uent/tolerances.hpp"

namespace uent {

namespace {

// Lane salts keep the per-purpose substreams of one StreamKey disjoint.
constexpr std::uint64_t kLaneState = 0;
constexpr std::uint64_t kLaneFactorA = 1;
constexpr std::uint64_t kLaneFactorB = 2;
constexpr std::uint64_t kLaneUnitary = 3;

std::uint64_t derive_seed(StreamKey key, std::uint64_t lane) {
  return mix_seed(mix_seed(key.master_seed, key.stream_index), lane);
}

std::vector<Complex> gaussian_vector(SeededRng& rng, int d) {
  std::vector<Complex> v(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto [re, im] = rng.gauss_pair();
    v[static_cast<size_t>(i)] = Complex(re, im);
  }
  return v;
}

}  // namespace

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a;
  const std::uint64_t h = splitmix64_next(s);
  s ^= b * 0xD1B54A32D192ED03ULL + h;
  return splitmix64_next(s);
}

double SeededRng::uniform01() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform_sym() { return 2.0 * uniform01() - 1.0; }

std::pair<double, double> SeededRng::gauss_pair() {
  // Marsaglia polar method: rejection-sample the unit disc, then scale.
  while (true) {
    const double u = uniform_sym();
    const double v = uniform_sym();
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      const double f = std::sqrt(-2.0 * std::log(s) / s);
      return {u * f, v * f};
    }
  }
}

std::uint64_t SeededRng::below(std::uint64_t n) {
  // Reject the partial cycle at the top of the 64-bit range.
  const std::uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
  const std::uint64_t limit = UINT64_MAX - rem;        // last accepted value
  std::uint64_t x;
  do {
    x = eng_();
  } while (x > limit);
  return x % n;
}

PureState haar_state(int d, StreamKey key) {
  if (d < 2) throw ShapeMismatch("state dimension must be at least 2");
  SeededRng rng(derive_seed(key, kLaneState));
  while (true) {
    std::vector<Complex> v = gaussian_vector(rng, d);
    double norm2 = 0.0;
    for (const Complex& z : v) norm2 += std::norm(z);
    if (norm2 < 1e-300) continue;  // astronomically unlikely; redraw
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& z : v) z *= inv;
    return PureState(std::move(v));
  }
}

ProductState random_product_state(const BipartiteShape& shape, StreamKey key) {
  StreamKey ka{derive_seed(key, kLaneFactorA), 0};
  StreamKey kb{derive_seed(key, kLaneFactorB), 0};
  return ProductState{haar_state(shape.m, ka), haar_state(shape.n, kb)};
}

UnitaryGate haar_unitary(int d, StreamKey key) {
  if (d < 2) throw ShapeMismatch("gate dimension must be at least 2");
  SeededRng rng(derive_seed(key, kLaneUnitary));

  // Columns of a Ginibre matrix, orthonormalized in order.
  std::vector<std::vector<Complex>> cols(static_cast<size_t>(d));
  for (int c = 0; c < d; ++c) cols[static_cast<size_t>(c)] = gaussian_vector(rng, d);

  auto project_out = [&](std::vector<Complex>& v, const std::vector<Complex>& q) {
    Complex ip(0.0, 0.0);
    for (int i = 0; i < d; ++i)
      ip += std::conj(q[static_cast<size_t>(i)]) * v[static_cast<size_t>(i)];
    for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] -= ip * q[static_cast<size_t>(i)];
  };
  auto normalize = [&](std::vector<Complex>& v) {
    double norm2 = 0.0;
    for (const Complex& z : v) norm2 += std::norm(z);
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& z : v) z *= inv;
  };

  for (int c = 0; c < d; ++c) {
    auto& v = cols[static_cast<size_t>(c)];
    for (int p = 0; p < c; ++p) project_out(v, cols[static_cast<size_t>(p)]);
    // Second pass mops up the rounding left by the first.
    for (int p = 0; p < c; ++p) project_out(v, cols[static_cast<size_t>(p)]);
    normalize(v);
  }

  ComplexMatrix u(d, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) u(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
  if (!is_unitary(u, tol::TOL_UNITARY))
    throw NoConvergence("orthonormalization failed to produce a unitary");

  return UnitaryGate{"HAAR" + std::to_string(d), std::move(u), std::nullopt,
                     {"gram_schmidt(ginibre(" + std::to_string(d) + "))", "", "sampled"}};
}

}  // namespace uent
