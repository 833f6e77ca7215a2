#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "uent/errors.hpp"

namespace uent {

using Complex = std::complex<double>;

// |z| without the overflow guard of std::abs; safe for the O(1)-magnitude
// entries this library works with and noticeably faster in hot loops.
inline double fast_abs(Complex z) {
  return std::sqrt(z.real() * z.real() + z.imag() * z.imag());
}

// Dense row-major complex matrix. Sizes in this library stay tiny
// (at most mn x mn with mn <= 16), so naive O(n^3) products are fine.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  std::vector<Complex> column(int j) const;

  double frobenius_norm() const;
  double max_abs() const;

  // Throws ShapeMismatch unless all entries are finite.
  void check_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& x);

// Kronecker product; (a ⊗ b)(i1*rb+i2, j1*cb+j2) = a(i1,j1) * b(i2,j2).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Entrywise check of U U† against the identity.
bool is_unitary(const ComplexMatrix& u, double tol);

}  // namespace uent
