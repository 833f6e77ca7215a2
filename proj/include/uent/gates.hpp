#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uent/states.hpp"

namespace uent {

// How a gate matrix came to be, kept alongside results so archived runs
// are self-describing.
struct GateProvenance {
  std::string expression;   // e.g. "i * X_12 * Z_12" or "principal_sqrt(F_16)"
  std::string sqrt_branch;  // branch rule when a square root was taken, else empty
  std::string source;       // "builtin", "file", or "sampled"
};

// A unitary together with its label and (when one exists) the bipartite
// shape it is meant to act on. Gates on prime dimensions carry no shape.
struct UnitaryGate {
  std::string label;
  ComplexMatrix matrix;
  std::optional<BipartiteShape> shape;
  GateProvenance provenance;

  int dim() const { return matrix.rows(); }
};

inline PureState apply_gate(const UnitaryGate& g, const PureState& s) {
  return apply_matrix(g.matrix, s);
}

// Cyclic shift: X|k⟩ = |(k+1) mod d⟩.
UnitaryGate shift_x(int d);

// Phase gate: Z|k⟩ = exp(2πi k/d)|k⟩.
UnitaryGate clock_z(int d);

// Generalized Y = i·X·Z.
UnitaryGate pauli_y(int d);

// Discrete Fourier transform F(j,k) = exp(+2πi jk/d)/√d.
UnitaryGate fourier(int d);

// The 12x12 real Hadamard-type gate on C³⊗C⁴ (entries ±1/√12). Its column 0
// is the uniform all-plus vector, i.e. (F₃|0⟩)⊗(F₄|0⟩), so it maps at least
// one product input to a product output. Throws TranscriptionError if the
// embedded sign table fails the unitarity self-check.
UnitaryGate hadamard_gate();

enum class CandidateId { UE1, UE2, UE3, UE4 };

// The four numerically found universal-entangler candidates:
//   UE1 = sqrt(Y_12)              on (3,4)
//   UE2 = sqrt(Y_16)              on (4,4)
//   UE3 = sqrt(X_12)† F_12 sqrt(X_12)   on (3,4)
//   UE4 = sqrt(X_16)† F_16 sqrt(X_16)   on (4,4)
UnitaryGate candidate(CandidateId id);

enum class SqrtBase { X, Z, F };

// Principal square root of a base gate (X, Z or F) of dimension d. The
// shape is inferred for d=12 → (3,4) and d=16 → (4,4); any other d needs
// an explicit shape, else ShapeUnknown is thrown.
UnitaryGate sqrt_gate(SqrtBase base, int d,
                      std::optional<BipartiteShape> shape = std::nullopt);

// Registry lookup by label (UH, X12, Z12, Y12, F12, X16, Z16, Y16, F16,
// SQRT_X12, SQRT_Z12, SQRT_F12, SQRT_X16, SQRT_Z16, SQRT_F16, UE1..UE4).
// Throws UnknownGate for anything else.
UnitaryGate builtin(const std::string& name);

// All labels accepted by builtin(), in registry order.
std::vector<std::string> builtin_names();

}  // namespace uent
