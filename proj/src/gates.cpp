#include "uent/gates.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "uent/decomp.hpp"
#include "uent/tolerances.hpp"

namespace uent {

namespace {

constexpr const char* kSqrtBranchRule =
    "eigenphase theta in (-pi,pi] -> theta/2; theta = pi -> +i";

// Shapes are only inferable for the two dimensions the experiments use.
std::optional<BipartiteShape> infer_shape(int d) {
  if (d == 12) return BipartiteShape(3, 4);
  if (d == 16) return BipartiteShape(4, 4);
  return std::nullopt;
}

void require_dim(int d) {
  if (d < 2) throw ShapeMismatch("gate dimension must be at least 2");
}

// Sign table of the 12x12 Hadamard-type gate, row by row; every entry is
// the listed sign times 1/sqrt(12).
constexpr std::array<const char*, 12> kHadamardRows = {
    "+-----------",
    "++-+---+++-+",
    "+++-+---+++-",
    "+-++-+---+++",
    "++-++-+---++",
    "+++-++-+---+",
    "++++-++-+---",
    "+-+++-++-+--",
    "+--+++-++-+-",
    "+---+++-++-+",
    "++---+++-++-",
    "+-+---+++-++",
};

}  // namespace

UnitaryGate shift_x(int d) {
  require_dim(d);
  ComplexMatrix m(d, d);
  for (int k = 0; k < d; ++k) m((k + 1) % d, k) = 1.0;
  return UnitaryGate{"X" + std::to_string(d), std::move(m), infer_shape(d),
                     {"cyclic shift |k> -> |k+1 mod d|", "", "builtin"}};
}

UnitaryGate clock_z(int d) {
  require_dim(d);
  ComplexMatrix m(d, d);
  for (int k = 0; k < d; ++k)
    m(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  return UnitaryGate{"Z" + std::to_string(d), std::move(m), infer_shape(d),
                     {"phase |k> -> exp(2 pi i k/d)|k>", "", "builtin"}};
}

UnitaryGate pauli_y(int d) {
  require_dim(d);
  ComplexMatrix m = Complex(0.0, 1.0) * (shift_x(d).matrix * clock_z(d).matrix);
  return UnitaryGate{"Y" + std::to_string(d), std::move(m), infer_shape(d),
                     {"i * X_" + std::to_string(d) + " * Z_" + std::to_string(d), "",
                      "builtin"}};
}

UnitaryGate fourier(int d) {
  require_dim(d);
  ComplexMatrix m(d, d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      m(j, k) = s * std::polar(1.0, 2.0 * std::numbers::pi * ((j * k) % d) / d);
  return UnitaryGate{"F" + std::to_string(d), std::move(m), infer_shape(d),
                     {"F(j,k) = exp(2 pi i jk/d)/sqrt(d)", "", "builtin"}};
}

UnitaryGate hadamard_gate() {
  ComplexMatrix m(12, 12);
  const double s = 1.0 / std::sqrt(12.0);
  for (int i = 0; i < 12; ++i) {
    const char* row = kHadamardRows[static_cast<size_t>(i)];
    for (int j = 0; j < 12; ++j) {
      const char c = row[j];
      if (c != '+' && c != '-')
        throw TranscriptionError("hadamard gate sign table holds a stray character");
      m(i, j) = (c == '+') ? s : -s;
    }
  }
  if (!is_unitary(m, tol::TOL_UNITARY))
    throw TranscriptionError("hadamard gate sign table is not unitary");
  return UnitaryGate{"UH", std::move(m), BipartiteShape(3, 4),
                     {"12x12 sign pattern / sqrt(12)", "", "builtin"}};
}

UnitaryGate sqrt_gate(SqrtBase base, int d, std::optional<BipartiteShape> shape) {
  require_dim(d);
  UnitaryGate g = (base == SqrtBase::X)   ? shift_x(d)
                  : (base == SqrtBase::Z) ? clock_z(d)
                                          : fourier(d);
  std::optional<BipartiteShape> sh = shape ? shape : infer_shape(d);
  if (!sh)
    throw ShapeUnknown("no bipartite shape known for dimension " + std::to_string(d) +
                       "; pass one explicitly");
  if (sh->dim() != d) throw ShapeMismatch("explicit shape does not match gate dimension");
  ComplexMatrix root = principal_sqrt_unitary(g.matrix);
  return UnitaryGate{"SQRT_" + g.label, std::move(root), sh,
                     {"principal_sqrt(" + g.label + ")", kSqrtBranchRule, "builtin"}};
}

UnitaryGate candidate(CandidateId id) {
  switch (id) {
    case CandidateId::UE1: {
      UnitaryGate g{"UE1", principal_sqrt_unitary(pauli_y(12).matrix), BipartiteShape(3, 4),
                    {"principal_sqrt(Y_12)", kSqrtBranchRule, "builtin"}};
      return g;
    }
    case CandidateId::UE2: {
      UnitaryGate g{"UE2", principal_sqrt_unitary(pauli_y(16).matrix), BipartiteShape(4, 4),
                    {"principal_sqrt(Y_16)", kSqrtBranchRule, "builtin"}};
      return g;
    }
    case CandidateId::UE3: {
      const ComplexMatrix r = principal_sqrt_unitary(shift_x(12).matrix);
      UnitaryGate g{"UE3", r.adjoint() * fourier(12).matrix * r, BipartiteShape(3, 4),
                    {"principal_sqrt(X_12)' * F_12 * principal_sqrt(X_12)",
                     kSqrtBranchRule, "builtin"}};
      return g;
    }
    case CandidateId::UE4: {
      const ComplexMatrix r = principal_sqrt_unitary(shift_x(16).matrix);
      UnitaryGate g{"UE4", r.adjoint() * fourier(16).matrix * r, BipartiteShape(4, 4),
                    {"principal_sqrt(X_16)' * F_16 * principal_sqrt(X_16)",
                     kSqrtBranchRule, "builtin"}};
      return g;
    }
  }
  throw UnknownGate("unknown candidate id");
}

UnitaryGate builtin(const std::string& name) {
  if (name == "UH") return hadamard_gate();
  if (name == "X12") return shift_x(12);
  if (name == "Z12") return clock_z(12);
  if (name == "Y12") return pauli_y(12);
  if (name == "F12") return fourier(12);
  if (name == "X16") return shift_x(16);
  if (name == "Z16") return clock_z(16);
  if (name == "Y16") return pauli_y(16);
  if (name == "F16") return fourier(16);
  if (name == "SQRT_X12") return sqrt_gate(SqrtBase::X, 12);
  if (name == "SQRT_Z12") return sqrt_gate(SqrtBase::Z, 12);
  if (name == "SQRT_F12") return sqrt_gate(SqrtBase::F, 12);
  if (name == "SQRT_X16") return sqrt_gate(SqrtBase::X, 16);
  if (name == "SQRT_Z16") return sqrt_gate(SqrtBase::Z, 16);
  if (name == "SQRT_F16") return sqrt_gate(SqrtBase::F, 16);
  if (name == "UE1") return candidate(CandidateId::UE1);
  if (name == "UE2") return candidate(CandidateId::UE2);
  if (name == "UE3") return candidate(CandidateId::UE3);
  if (name == "UE4") return candidate(CandidateId::UE4);
  throw UnknownGate("no builtin gate named '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"UH",       "X12",      "Z12",      "Y12",      "F12",      "X16",     "Z16",
          "Y16",      "F16",      "SQRT_X12", "SQRT_Z12", "SQRT_F12", "SQRT_X16",
          "SQRT_Z16", "SQRT_F16", "UE1",      "UE2",      "UE3",      "UE4"};
}

}  // namespace uent
