#include "uent/separability.hpp"

#include <algorithm>
#include <cmath>

#include "uent/decomp.hpp"

namespace uent {

ResidualReport matrix_kron_residual(const ComplexMatrix& m) {
  ResidualReport rep;
  rep.minors.reserve(static_cast<size_t>(m.rows() * (m.rows() - 1) / 2) *
                     static_cast<size_t>(m.cols() * (m.cols() - 1) / 2));
  for (int i1 = 0; i1 < m.rows(); ++i1)
    for (int i2 = i1 + 1; i2 < m.rows(); ++i2)
      for (int j1 = 0; j1 < m.cols(); ++j1)
        for (int j2 = j1 + 1; j2 < m.cols(); ++j2) {
          const Complex det = m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1);
          rep.minors.push_back({i1, i2, j1, j2, det});
          const double a = fast_abs(det);
          rep.total += a;
          rep.max_minor = std::max(rep.max_minor, a);
        }
  rep.minor_count = static_cast<int>(rep.minors.size());
  return rep;
}

double matrix_kron_residual_total(const ComplexMatrix& m) {
  double total = 0.0;
  for (int i1 = 0; i1 < m.rows(); ++i1)
    for (int i2 = i1 + 1; i2 < m.rows(); ++i2)
      for (int j1 = 0; j1 < m.cols(); ++j1)
        for (int j2 = j1 + 1; j2 < m.cols(); ++j2)
          total += fast_abs(m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1));
  return total;
}

ResidualReport state_kron_residual(const PureState& s, const BipartiteShape& shape) {
  return matrix_kron_residual(coefficient_matrix(s, shape));
}

bool is_separable_state(const PureState& s, const BipartiteShape& shape, double tol) {
  const ComplexMatrix m = coefficient_matrix(s, shape);
  const bool by_minors = matrix_kron_residual_total(m) <= tol;
  const std::vector<double> sigma = singular_values(m);
  const bool by_schmidt = sigma[1] <= std::sqrt(tol);
  if (by_minors != by_schmidt)
    throw OracleDisagreement(
        "minor residual and Schmidt criterion disagree on separability");
  return by_minors;
}

void SplitMask::validate() const {
  if (dims.size() < 2) throw ShapeMismatch("split needs at least two factors");
  for (int d : dims)
    if (d < 2) throw ShapeMismatch("every factor dimension must be at least 2");
  if (side_a.empty() || side_a.size() >= dims.size())
    throw ShapeMismatch("side_a must be a non-empty proper subset of the positions");
  std::vector<int> sorted = side_a;
  std::sort(sorted.begin(), sorted.end());
  for (size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 0 || sorted[k] >= static_cast<int>(dims.size()))
      throw ShapeMismatch("split position out of range");
    if (k > 0 && sorted[k] == sorted[k - 1])
      throw ShapeMismatch("split lists a position twice");
  }
}

ComplexMatrix split_coefficient_matrix(const PureState& s, const SplitMask& split) {
  split.validate();
  const int npos = static_cast<int>(split.dims.size());

  std::vector<bool> in_a(static_cast<size_t>(npos), false);
  for (int p : split.side_a) in_a[static_cast<size_t>(p)] = true;

  int dim = 1, rows = 1, cols = 1;
  for (int p = 0; p < npos; ++p) {
    const int d = split.dims[static_cast<size_t>(p)];
    dim *= d;
    (in_a[static_cast<size_t>(p)] ? rows : cols) *= d;
  }
  if (s.dim() != dim) throw ShapeMismatch("state dimension does not match split dims");

  ComplexMatrix out(rows, cols);
  std::vector<int> digit(static_cast<size_t>(npos));
  for (int flat = 0; flat < dim; ++flat) {
    int rem = flat;
    for (int p = npos - 1; p >= 0; --p) {
      digit[static_cast<size_t>(p)] = rem % split.dims[static_cast<size_t>(p)];
      rem /= split.dims[static_cast<size_t>(p)];
    }
    int r = 0, c = 0;
    for (int p = 0; p < npos; ++p) {
      if (in_a[static_cast<size_t>(p)])
        r = r * split.dims[static_cast<size_t>(p)] + digit[static_cast<size_t>(p)];
      else
        c = c * split.dims[static_cast<size_t>(p)] + digit[static_cast<size_t>(p)];
    }
    out(r, c) = s[flat];
  }
  return out;
}

ResidualReport multipartite_split_residual(const PureState& s, const SplitMask& split) {
  return matrix_kron_residual(split_coefficient_matrix(s, split));
}

ResidualReport operator_kron_residual(const UnitaryGate& g, const BipartiteShape& shape) {
  const int m = shape.m, n = shape.n;
  if (g.dim() != shape.dim() || g.matrix.cols() != g.matrix.rows())
    throw ShapeMismatch("gate dimension does not match bipartite shape");
  ComplexMatrix r(m * m, n * n);
  for (int i1 = 0; i1 < m; ++i1)
    for (int i2 = 0; i2 < m; ++i2)
      for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = 0; j2 < n; ++j2)
          r(i1 * m + i2, j1 * n + j2) = g.matrix(i1 * n + j1, i2 * n + j2);
  return matrix_kron_residual(r);
}

double gamma_condition_residual(const ComplexMatrix& n_matrix, const BipartiteShape& shape) {
  const int m = shape.m, n = shape.n;
  if (n_matrix.rows() != shape.dim() || n_matrix.cols() != shape.dim())
    throw ShapeMismatch("matrix dimension does not match bipartite shape");
  auto gamma = [&](int p, int q, int r, int s) { return n_matrix(p * n + r, q * n + s); };
  double total = 0.0;
  for (int p1 = 0; p1 < m; ++p1)
    for (int q1 = 0; q1 < m; ++q1)
      for (int p2 = 0; p2 < m; ++p2)
        for (int q2 = 0; q2 < m; ++q2)
          for (int r1 = 0; r1 < n; ++r1)
            for (int s1 = 0; s1 < n; ++s1)
              for (int r2 = 0; r2 < n; ++r2)
                for (int s2 = 0; s2 < n; ++s2)
                  total += fast_abs(gamma(p1, q1, r1, s1) * gamma(p2, q2, r2, s2) -
                                    gamma(p1, q1, r2, s2) * gamma(p2, q2, r1, s1));
  return total;
}

ColumnFilterReport column_separability_filter(const UnitaryGate& g,
                                              const BipartiteShape& shape, double tol) {
  if (g.dim() != shape.dim())
    throw ShapeMismatch("gate dimension does not match bipartite shape");
  ComplexMatrix col(shape.m, shape.n);
  ColumnFilterReport rep;
  double min_res = -1.0;
  int min_col = -1;
  for (int c = 0; c < g.dim(); ++c) {
    for (int i = 0; i < shape.m; ++i)
      for (int j = 0; j < shape.n; ++j) col(i, j) = g.matrix(i * shape.n + j, c);
    const double res = matrix_kron_residual_total(col);
    if (res <= tol) {
      rep.pass = false;
      rep.column = c;
      rep.residual = res;
      return rep;
    }
    if (min_res < 0.0 || res < min_res) {
      min_res = res;
      min_col = c;
    }
  }
  rep.pass = true;
  rep.column = min_col;
  rep.residual = min_res;
  return rep;
}

}  // namespace uent
