#pragma once

namespace uent::tol {

// Unitarity check: max |(U U†)_ij - δ_ij| must stay below this.
inline constexpr double TOL_UNITARY = 1e-10;

// Reconstruction contracts of the decompositions (eig, sqrt), Frobenius norm.
inline constexpr double TOL_RECON = 1e-9;

// Normality check ‖A A† - A† A‖_F for the spectral routine.
inline constexpr double TOL_NORMAL = 1e-8;

// State vectors must be normalized to this accuracy on construction.
inline constexpr double TOL_STATE_NORM = 1e-10;

// Default threshold on the 2x2-minor residual below which a state counts
// as separable (product).
inline constexpr double DEFAULT_SEPARABILITY_TOL = 1e-8;

// Singular values below this are treated as exact zeros when computing
// entanglement entropy.
inline constexpr double SCHMIDT_CLAMP = 1e-12;

// Eigenphases within this distance of -pi are folded to +pi before
// halving, so the square-root branch treats them as phase pi.
inline constexpr double BRANCH_FOLD = 1e-12;

// A genome factor with norm below this cannot be normalized.
inline constexpr double MIN_FACTOR_NORM = 1e-6;

// Objective value assigned to genomes that fail to decode.
inline constexpr double GENOME_PENALTY = 1e10;

// Default residual threshold for declaring a counterexample in searches.
inline constexpr double DEFAULT_RESIDUAL_TOL = 1e-9;

// Default entropy threshold for confirming a counterexample output state.
inline constexpr double DEFAULT_ENTROPY_TOL = 1e-8;

}  // namespace uent::tol
