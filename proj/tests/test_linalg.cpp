#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "uent/complex_matrix.hpp"
#include "uent/decomp.hpp"
#include "uent/sampling.hpp"
#include "uent/tolerances.hpp"

using uent::Complex;
using uent::ComplexMatrix;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  return ComplexMatrix(2, 2, {a, b, c, d});
}

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

}  // namespace

TEST_CASE("matrix construction validates shape and finiteness") {
  CHECK_THROWS_AS(ComplexMatrix(0, 3), uent::ShapeMismatch);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), uent::ShapeMismatch);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(ComplexMatrix(1, 2, {Complex(inf, 0.0), 0.0}), uent::ShapeMismatch);
}

TEST_CASE("product, adjoint and norms on hand-sized matrices") {
  const ComplexMatrix a = mat2(1.0, Complex(0.0, 2.0), 3.0, -1.0);
  const ComplexMatrix b = mat2(0.0, 1.0, 1.0, 0.0);
  const ComplexMatrix ab = a * b;
  CHECK(ab(0, 0) == Complex(0.0, 2.0));
  CHECK(ab(0, 1) == Complex(1.0, 0.0));
  CHECK(ab(1, 0) == Complex(-1.0, 0.0));
  CHECK(ab(1, 1) == Complex(3.0, 0.0));

  const ComplexMatrix ad = a.adjoint();
  CHECK(ad(0, 1) == Complex(3.0, 0.0));
  CHECK(ad(1, 0) == Complex(0.0, -2.0));

  CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(1.0 + 4.0 + 9.0 + 1.0)));
  CHECK(a.max_abs() == doctest::Approx(3.0));
}

TEST_CASE("kron layout matches the first-factor-major convention") {
  const ComplexMatrix a = mat2(1.0, 2.0, 3.0, 4.0);
  const ComplexMatrix b = mat2(0.0, 5.0, 6.0, 7.0);
  const ComplexMatrix k = uent::kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  CHECK(k(0, 1) == Complex(5.0, 0.0));   // a(0,0)·b(0,1)
  CHECK(k(1, 0) == Complex(6.0, 0.0));   // a(0,0)·b(1,0)
  CHECK(k(2, 1) == Complex(15.0, 0.0));  // a(1,0)·b(0,1)
  CHECK(k(3, 3) == Complex(28.0, 0.0));  // a(1,1)·b(1,1)

  CHECK(max_diff(uent::kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                 ComplexMatrix::identity(6)) == 0.0);
}

TEST_CASE("kron satisfies the mixed product property") {
  const ComplexMatrix a = uent::haar_unitary(2, {11, 0}).matrix;
  const ComplexMatrix b = uent::haar_unitary(3, {11, 1}).matrix;
  const ComplexMatrix c = uent::haar_unitary(2, {11, 2}).matrix;
  const ComplexMatrix d = uent::haar_unitary(3, {11, 3}).matrix;
  const ComplexMatrix lhs = uent::kron(a, b) * uent::kron(c, d);
  const ComplexMatrix rhs = uent::kron(a * c, b * d);
  CHECK(max_diff(lhs, rhs) < 1e-14);
}

TEST_CASE("is_unitary accepts rotations and rejects scalings") {
  CHECK(uent::is_unitary(ComplexMatrix::identity(5), uent::tol::TOL_UNITARY));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(uent::is_unitary(mat2(s, s, s, -s), uent::tol::TOL_UNITARY));
  CHECK_FALSE(uent::is_unitary(mat2(2.0, 0.0, 0.0, 1.0), uent::tol::TOL_UNITARY));
  CHECK_FALSE(uent::is_unitary(ComplexMatrix(2, 3), uent::tol::TOL_UNITARY));
}

TEST_CASE("eig_normal reproduces the hand-diagonalized exchange matrix") {
  // [[0,1],[1,0]] has eigenpairs +1 ~ (1,1)/√2 and -1 ~ (1,-1)/√2; phase
  // ordering puts +1 (phase 0) before -1 (phase pi).
  const ComplexMatrix x = mat2(0.0, 1.0, 1.0, 0.0);
  const uent::SpectralDecomposition e = uent::eig_normal(x, uent::tol::TOL_NORMAL);
  REQUIRE(e.eigenvalues.size() == 2);
  CHECK(uent::fast_abs(e.eigenvalues[0] - Complex(1.0, 0.0)) < 1e-12);
  CHECK(uent::fast_abs(e.eigenvalues[1] - Complex(-1.0, 0.0)) < 1e-12);

  // Columns are orthonormal.
  const ComplexMatrix v = e.eigenvectors;
  CHECK(uent::is_unitary(v, 1e-10));
  // Eigenvector property x v = λ v, column by column.
  for (int k = 0; k < 2; ++k) {
    Complex r0 = x(0, 0) * v(0, k) + x(0, 1) * v(1, k);
    Complex r1 = x(1, 0) * v(0, k) + x(1, 1) * v(1, k);
    CHECK(uent::fast_abs(r0 - e.eigenvalues[(size_t)k] * v(0, k)) < 1e-12);
    CHECK(uent::fast_abs(r1 - e.eigenvalues[(size_t)k] * v(1, k)) < 1e-12);
  }
}

TEST_CASE("eig_normal sorts by phase on (-pi, pi]") {
  // diag(1, i, -1, -i): phases 0, pi/2, pi, -pi/2 sort to -pi/2, 0, pi/2, pi.
  ComplexMatrix d(4, 4);
  d(0, 0) = 1.0;
  d(1, 1) = Complex(0.0, 1.0);
  d(2, 2) = -1.0;
  d(3, 3) = Complex(0.0, -1.0);
  const uent::SpectralDecomposition e = uent::eig_normal(d, uent::tol::TOL_NORMAL);
  CHECK(uent::fast_abs(e.eigenvalues[0] - Complex(0.0, -1.0)) < 1e-12);
  CHECK(uent::fast_abs(e.eigenvalues[1] - Complex(1.0, 0.0)) < 1e-12);
  CHECK(uent::fast_abs(e.eigenvalues[2] - Complex(0.0, 1.0)) < 1e-12);
  CHECK(uent::fast_abs(e.eigenvalues[3] - Complex(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("eig_normal rejects non-normal input") {
  CHECK_THROWS_AS(uent::eig_normal(mat2(0.0, 1.0, 0.0, 0.0), uent::tol::TOL_NORMAL),
                  uent::NotNormal);
  CHECK_THROWS_AS(uent::eig_normal(ComplexMatrix(2, 3), uent::tol::TOL_NORMAL),
                  uent::ShapeMismatch);
}

TEST_CASE("eig_normal is deterministic") {
  const ComplexMatrix u = uent::haar_unitary(6, {42, 0}).matrix;
  const auto e1 = uent::eig_normal(u, uent::tol::TOL_NORMAL);
  const auto e2 = uent::eig_normal(u, uent::tol::TOL_NORMAL);
  for (size_t k = 0; k < 6; ++k) CHECK(e1.eigenvalues[k] == e2.eigenvalues[k]);
  CHECK(max_diff(e1.eigenvectors, e2.eigenvectors) == 0.0);
}

TEST_CASE("principal square root of diag(1,-1) is diag(1,i)") {
  const ComplexMatrix s = uent::principal_sqrt_unitary(mat2(1.0, 0.0, 0.0, -1.0));
  CHECK(uent::fast_abs(s(0, 0) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(uent::fast_abs(s(1, 1) - Complex(0.0, 1.0)) < 1e-12);
  CHECK(uent::fast_abs(s(0, 1)) < 1e-12);
  CHECK(uent::fast_abs(s(1, 0)) < 1e-12);
}

TEST_CASE("principal square root of the exchange matrix, hand value") {
  // sqrt([[0,1],[1,0]]) = [[1+i, 1-i], [1-i, 1+i]] / 2.
  const ComplexMatrix s = uent::principal_sqrt_unitary(mat2(0.0, 1.0, 1.0, 0.0));
  CHECK(uent::fast_abs(s(0, 0) - Complex(0.5, 0.5)) < 1e-12);
  CHECK(uent::fast_abs(s(0, 1) - Complex(0.5, -0.5)) < 1e-12);
  CHECK(uent::fast_abs(s(1, 0) - Complex(0.5, -0.5)) < 1e-12);
  CHECK(uent::fast_abs(s(1, 1) - Complex(0.5, 0.5)) < 1e-12);
}

TEST_CASE("square roots of random unitaries square back and stay unitary") {
  for (int d : {2, 3, 5, 8}) {
    const ComplexMatrix u = uent::haar_unitary(d, {99, (std::uint64_t)d}).matrix;
    const ComplexMatrix s = uent::principal_sqrt_unitary(u);
    CHECK(uent::is_unitary(s, uent::tol::TOL_UNITARY));
    CHECK((s * s - u).frobenius_norm() < uent::tol::TOL_RECON);

    // Principal branch: every eigenphase of the root lies in (-pi/2, pi/2].
    const auto e = uent::eig_normal(s, uent::tol::TOL_NORMAL);
    for (const Complex& lam : e.eigenvalues) {
      const double th = std::atan2(lam.imag(), lam.real());
      CHECK(th > -std::numbers::pi / 2 - 1e-9);
      CHECK(th <= std::numbers::pi / 2 + 1e-9);
    }
  }
}

TEST_CASE("principal square root rejects non-unitary input") {
  CHECK_THROWS_AS(uent::principal_sqrt_unitary(mat2(2.0, 0.0, 0.0, 1.0)),
                  uent::NotUnitary);
}

TEST_CASE("singular values are descending and match hand values") {
  const std::vector<double> sv = uent::singular_values(mat2(3.0, 0.0, 0.0, 4.0));
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == doctest::Approx(4.0));
  CHECK(sv[1] == doctest::Approx(3.0));

  const ComplexMatrix rect(2, 3, {1.0, 0.0, 0.0, 0.0, 2.0, 0.0});
  const std::vector<double> sv2 = uent::singular_values(rect);
  REQUIRE(sv2.size() == 2);
  CHECK(sv2[0] == doctest::Approx(2.0));
  CHECK(sv2[1] == doctest::Approx(1.0));

  for (double s : uent::singular_values(uent::haar_unitary(7, {5, 5}).matrix))
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}
