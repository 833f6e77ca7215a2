#pragma once

#include <vector>

#include "uent/gates.hpp"
#include "uent/states.hpp"
#include "uent/tolerances.hpp"

namespace uent {

// One 2x2 minor of a coefficient matrix: rows i1 < i2, columns j1 < j2.
struct MinorTerm {
  int i1, i2, j1, j2;
  Complex value;  // M(i1,j1)·M(i2,j2) − M(i1,j2)·M(i2,j1)
};

// Sum of the moduli of all 2x2 minors. Zero (within tolerance) exactly
// when the matrix has rank one, i.e. the underlying object factorizes.
struct ResidualReport {
  double total = 0.0;
  double max_minor = 0.0;
  int minor_count = 0;
  std::vector<MinorTerm> minors;  // lexicographic in (i1, i2, j1, j2)
};

// Residual of an arbitrary matrix (the building block for the state,
// operator and split variants below).
ResidualReport matrix_kron_residual(const ComplexMatrix& m);

// Same total without materializing the minor list; used in hot loops.
double matrix_kron_residual_total(const ComplexMatrix& m);

// Residual of the state's m x n coefficient matrix.
ResidualReport state_kron_residual(const PureState& s, const BipartiteShape& shape);

// Dual-criterion separability decision: the minor residual must agree
// with the second Schmidt coefficient (σ₂ ≤ √tol). A contradiction
// between the two raises OracleDisagreement.
bool is_separable_state(const PureState& s, const BipartiteShape& shape,
                        double tol = tol::DEFAULT_SEPARABILITY_TOL);

// A bipartition of a multi-factor space: dims are the local dimensions in
// tensor order (first factor major), side_a the positions grouped into the
// row index. Positions not listed form the column side.
struct SplitMask {
  std::vector<int> dims;
  std::vector<int> side_a;

  void validate() const;  // throws ShapeMismatch on malformed masks
};

// Reshapes the state into a matrix whose rows enumerate side_a digits
// (ascending position order, first listed is major) and whose columns
// enumerate the complement.
ComplexMatrix split_coefficient_matrix(const PureState& s, const SplitMask& split);

// Minor residual of that reshape: zero iff the state factorizes across
// the split.
ResidualReport multipartite_split_residual(const PureState& s, const SplitMask& split);

// Operator analogue: realigns the mn x mn matrix U into the m² x n² matrix
// R((i1,i2),(j1,j2)) = U(i1·n+j1, i2·n+j2), whose rank is one iff U = A ⊗ B.
// The report's minors refer to R.
ResidualReport operator_kron_residual(const UnitaryGate& g, const BipartiteShape& shape);

// Brute-force factorization witness for an mn x mn matrix N: sums
// |γ(p1,q1,r1,s1)·γ(p2,q2,r2,s2) − γ(p1,q1,r2,s2)·γ(p2,q2,r1,s1)| over all
// index quadruple pairs, where γ(p,q,r,s) = N(p·n+r, q·n+s) on basis
// vectors. Zero iff N factorizes; cost (m²n²)², kept as a slow oracle.
double gamma_condition_residual(const ComplexMatrix& n_matrix, const BipartiteShape& shape);

// Necessary-condition screen for universal entanglers: every column of the
// gate is the image of a basis product input, so a single separable column
// already disproves universality.
struct ColumnFilterReport {
  bool pass = false;
  // First failing column when pass is false; otherwise the column with the
  // smallest residual (the weakest margin). `residual` is that column's total.
  int column = -1;
  double residual = 0.0;
};

ColumnFilterReport column_separability_filter(const UnitaryGate& g,
                                              const BipartiteShape& shape,
                                              double tol = tol::DEFAULT_SEPARABILITY_TOL);

}  // namespace uent
