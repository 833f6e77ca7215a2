#include "uent/states.hpp"

#include <cmath>

#include "uent/decomp.hpp"

namespace uent {

BipartiteShape::BipartiteShape(int m_, int n_) : m(m_), n(n_) {
  if (m < 2 || n < 2) throw ShapeMismatch("bipartite factors must each have dimension >= 2");
}

PureState::PureState(std::vector<Complex> amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.empty()) throw ShapeMismatch("state needs at least one amplitude");
  double norm2 = 0.0;
  for (const Complex& z : amp_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ShapeMismatch("state contains a non-finite amplitude");
    norm2 += std::norm(z);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > tol::TOL_STATE_NORM)
    throw ShapeMismatch("state vector is not normalized");
}

PureState PureState::basis(int dim, int index) {
  if (index < 0 || index >= dim) throw ShapeMismatch("basis index out of range");
  std::vector<Complex> amp(static_cast<size_t>(dim), Complex(0.0, 0.0));
  amp[static_cast<size_t>(index)] = 1.0;
  return PureState(std::move(amp));
}

PureState ProductState::flatten() const {
  const int m = factor_a.dim();
  const int n = factor_b.dim();
  std::vector<Complex> amp(static_cast<size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      amp[static_cast<size_t>(i) * n + j] = factor_a[i] * factor_b[j];
  return PureState(std::move(amp));
}

ComplexMatrix coefficient_matrix(const PureState& s, const BipartiteShape& shape) {
  if (s.dim() != shape.dim())
    throw ShapeMismatch("state dimension does not match bipartite shape");
  ComplexMatrix m(shape.m, shape.n);
  for (int i = 0; i < shape.m; ++i)
    for (int j = 0; j < shape.n; ++j) m(i, j) = s[i * shape.n + j];
  return m;
}

PureState state_from_coefficients(const ComplexMatrix& m) {
  std::vector<Complex> amp;
  amp.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) amp.push_back(m(i, j));
  return PureState(std::move(amp));
}

std::vector<double> schmidt_coefficients(const PureState& s, const BipartiteShape& shape) {
  return singular_values(coefficient_matrix(s, shape));
}

double entropy_from_singular_values(std::span<const double> sigma, double log_base) {
  if (log_base <= 0.0 || log_base == 1.0)
    throw ShapeMismatch("log base must be positive and different from 1");
  double h = 0.0;
  for (double sv : sigma) {
    if (sv < tol::SCHMIDT_CLAMP) continue;  // 0·log 0 = 0
    const double p = sv * sv;
    h -= p * std::log(p);
  }
  h /= std::log(log_base);
  return h < 0.0 ? 0.0 : h;
}

double entanglement_entropy(const PureState& s, const BipartiteShape& shape,
                            double log_base) {
  const std::vector<double> sigma = schmidt_coefficients(s, shape);
  return entropy_from_singular_values(sigma, log_base);
}

PureState apply_matrix(const ComplexMatrix& u, const PureState& s) {
  if (u.cols() != s.dim()) throw ShapeMismatch("gate and state dimensions differ");
  return PureState(u * s.amplitudes());
}

PureState kappa_state() {
  std::vector<Complex> amp(27, Complex(0.0, 0.0));
  const double c = 1.0 / std::sqrt(6.0);
  auto at = [&](int a, int b, int d) -> Complex& {
    return amp[static_cast<size_t>(a * 9 + b * 3 + d)];
  };
  at(0, 0, 0) = c;
  at(0, 1, 1) = -c;
  at(1, 1, 2) = -c;
  at(1, 2, 0) = c;
  at(2, 0, 2) = -c;
  at(2, 2, 1) = c;
  return PureState(std::move(amp));
}

}  // namespace uent
