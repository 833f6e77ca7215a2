#include "uent/complex_matrix.hpp"

#include <cmath>
#include <string>

namespace uent {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ShapeMismatch(what);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
  entries_.assign(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
  require(entries_.size() == static_cast<size_t>(rows) * cols,
          "entry count does not match dimensions");
  check_finite();
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

std::vector<Complex> ComplexMatrix::column(int j) const {
  require(j >= 0 && j < cols_, "column index out of range");
  std::vector<Complex> out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[static_cast<size_t>(i)] = (*this)(i, j);
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, fast_abs(z));
  return m;
}

void ComplexMatrix::check_finite() const {
  for (const Complex& z : entries_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ShapeMismatch("matrix contains a non-finite entry");
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), "inner dimensions differ in matrix product");
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) *= s;
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sizes differ in sum");
  ComplexMatrix out = a;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sizes differ in difference");
  ComplexMatrix out = a;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& x) {
  require(static_cast<size_t>(a.cols()) == x.size(), "matrix-vector size mismatch");
  std::vector<Complex> y(static_cast<size_t>(a.rows()), Complex(0.0, 0.0));
  for (int i = 0; i < a.rows(); ++i) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = acc;
  }
  return y;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int j1 = 0; j1 < a.cols(); ++j1) {
      const Complex aij = a(i1, j1);
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
    }
  return out;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const int n = u.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) acc += u(i, k) * std::conj(u(j, k));
      const Complex want = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      if (fast_abs(acc - want) > tol) return false;
    }
  return true;
}

}  // namespace uent
