#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "uent/complex_matrix.hpp"
#include "uent/tolerances.hpp"

namespace uent {

// Bipartite cut of a Hilbert space into factors of dimension m and n,
// both at least 2. Flat index convention: |i⟩_m ⊗ |j⟩_n sits at i*n + j
// (first factor major).
struct BipartiteShape {
  int m = 0;
  int n = 0;

  BipartiteShape(int m_, int n_);
  int dim() const { return m * n; }
};

// Normalized pure state on a d-dimensional space.
class PureState {
 public:
  // Validates finiteness and unit norm (within TOL_STATE_NORM).
  explicit PureState(std::vector<Complex> amplitudes);

  static PureState basis(int dim, int index);

  int dim() const { return static_cast<int>(amp_.size()); }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  Complex operator[](int i) const { return amp_[static_cast<size_t>(i)]; }

 private:
  std::vector<Complex> amp_;
};

// Pair of local states; its flattening is a product state by construction.
struct ProductState {
  PureState factor_a;
  PureState factor_b;

  PureState flatten() const;  // amplitudes a_i * b_j at flat index i*n + j
};

// Reshape of the amplitudes into the m x n matrix M(i,j) = amp[i*n + j].
ComplexMatrix coefficient_matrix(const PureState& s, const BipartiteShape& shape);

// Inverse reshape; throws ShapeMismatch if the matrix entries are not a
// unit-norm amplitude vector.
PureState state_from_coefficients(const ComplexMatrix& m);

// Schmidt coefficients = singular values of the coefficient matrix,
// descending; min(m, n) values whose squares sum to 1.
std::vector<double> schmidt_coefficients(const PureState& s, const BipartiteShape& shape);

// Entanglement entropy of the cut: -Σ σ²·log(σ²) in the given log base.
// Singular values below SCHMIDT_CLAMP are treated as zero; the result is
// clamped to be non-negative. Base e by default; pass 2.0 for bits.
double entanglement_entropy(const PureState& s, const BipartiteShape& shape,
                            double log_base = std::numbers::e);

// Entropy from precomputed singular values, same conventions. Exposed so
// other cuts (multipartite splits) can reuse the clamping rules.
double entropy_from_singular_values(std::span<const double> sigma,
                                    double log_base = std::numbers::e);

// y = U x. Throws ShapeMismatch if dimensions differ.
PureState apply_matrix(const ComplexMatrix& u, const PureState& s);

// The three-qutrit state (1/√6)(|000⟩ - |011⟩ - |112⟩ + |120⟩ - |202⟩ + |221⟩),
// used as a known-entangled fixture: every bipartition of it has entropy ln 3.
PureState kappa_state();

}  // namespace uent
