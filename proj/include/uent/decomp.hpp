#pragma once

#include <vector>

#include "uent/complex_matrix.hpp"

namespace uent {

// Eigendecomposition of a normal matrix: A = V diag(eigenvalues) V† with
// V unitary. Pairs are sorted by eigenvalue phase in (-pi, pi], ties broken
// by modulus and then by the row index of the eigenvector's first
// largest-magnitude component, so the ordering is reproducible.
struct SpectralDecomposition {
  std::vector<Complex> eigenvalues;
  ComplexMatrix eigenvectors;  // columns, orthonormal
};

// Throws NotNormal if ‖A A† - A† A‖_F > tol, NoConvergence if the
// reconstruction error exceeds its contract.
SpectralDecomposition eig_normal(const ComplexMatrix& a, double tol);

// Principal square root of a unitary: each eigenphase θ ∈ (-pi, pi] maps
// to θ/2; the θ = pi eigenvalue -1 maps to +i. Result S satisfies
// S·S = U within TOL_RECON and is itself unitary.
ComplexMatrix principal_sqrt_unitary(const ComplexMatrix& u);

// Singular values in descending order; all non-negative.
std::vector<double> singular_values(const ComplexMatrix& m);

}  // namespace uent
