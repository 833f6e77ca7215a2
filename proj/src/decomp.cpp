#include "uent/decomp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uent/tolerances.hpp"

namespace uent {

namespace {

using EigenCMat = Eigen::MatrixXcd;
using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>;

EigenCMat to_eigen(const ComplexMatrix& m) {
  return RowMajorMap(m.entries().data(), m.rows(), m.cols());
}

// Phase in (-pi, pi]; atan2's -pi output is mapped to +pi so the interval
// is half-open on the left.
double phase_half_open(Complex z) {
  double th = std::atan2(z.imag(), z.real());
  if (th <= -std::numbers::pi) th = std::numbers::pi;
  return th;
}

}  // namespace

SpectralDecomposition eig_normal(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw ShapeMismatch("eig_normal needs a square matrix");
  const int n = a.rows();

  // Normality gate: A A† must equal A† A, otherwise no unitary
  // diagonalization exists and the Schur route below would silently
  // return garbage eigenvectors.
  const ComplexMatrix ad = a.adjoint();
  const double normality = (a * ad - ad * a).frobenius_norm();
  if (normality > tol) throw NotNormal("matrix is not normal within tolerance");

  Eigen::ComplexSchur<EigenCMat> schur(to_eigen(a));
  if (schur.info() != Eigen::Success)
    throw NoConvergence("Schur iteration failed to converge");

  // For a normal matrix the Schur form is diagonal, so the Schur basis is
  // an orthonormal eigenbasis and T's diagonal holds the eigenvalues.
  const EigenCMat t = schur.matrixT();
  const EigenCMat q = schur.matrixU();

  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;

  auto key_phase = [&](int i) { return phase_half_open(t(i, i)); };
  auto key_mod = [&](int i) { return std::abs(t(i, i)); };
  auto key_vec = [&](int i) {
    // Row of the first component attaining the column's maximum modulus.
    int arg = 0;
    double best = -1.0;
    for (int r = 0; r < n; ++r) {
      const double m = std::abs(q(r, i));
      if (m > best + 1e-12) {
        best = m;
        arg = r;
      }
    }
    return arg;
  };
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const double pi_ = key_phase(i), pj = key_phase(j);
    if (pi_ != pj) return pi_ < pj;
    const double mi = key_mod(i), mj = key_mod(j);
    if (mi != mj) return mi < mj;
    return key_vec(i) < key_vec(j);
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  out.eigenvectors = ComplexMatrix(n, n);
  for (int c = 0; c < n; ++c) {
    const int s = order[static_cast<size_t>(c)];
    out.eigenvalues[static_cast<size_t>(c)] = t(s, s);
    for (int r = 0; r < n; ++r) out.eigenvectors(r, c) = q(r, s);
  }

  // Reconstruction contract: A = V diag(λ) V†.
  ComplexMatrix recon(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < n; ++k)
        acc += out.eigenvectors(i, k) * out.eigenvalues[static_cast<size_t>(k)] *
               std::conj(out.eigenvectors(j, k));
      recon(i, j) = acc;
    }
  if ((recon - a).frobenius_norm() > tol::TOL_RECON)
    throw NoConvergence("eigendecomposition reconstruction exceeds tolerance");

  return out;
}

ComplexMatrix principal_sqrt_unitary(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw ShapeMismatch("square root needs a square matrix");
  if (!is_unitary(u, tol::TOL_UNITARY))
    throw NotUnitary("principal_sqrt_unitary requires a unitary input");

  const SpectralDecomposition eig = eig_normal(u, tol::TOL_NORMAL);
  const int n = u.rows();

  std::vector<Complex> roots(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    double th = phase_half_open(eig.eigenvalues[static_cast<size_t>(k)]);
    // Rounding can land an intended phase-pi eigenvalue a hair below -pi's
    // image; fold such phases back onto +pi so they take the +i branch.
    if (th < -std::numbers::pi + tol::BRANCH_FOLD) th = std::numbers::pi;
    roots[static_cast<size_t>(k)] = std::polar(1.0, th / 2.0);
  }

  ComplexMatrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < n; ++k)
        acc += eig.eigenvectors(i, k) * roots[static_cast<size_t>(k)] *
               std::conj(eig.eigenvectors(j, k));
      s(i, j) = acc;
    }

  if ((s * s - u).frobenius_norm() > tol::TOL_RECON)
    throw NoConvergence("square root reconstruction exceeds tolerance");
  return s;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<EigenCMat> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  std::vector<double> out(static_cast<size_t>(sv.size()));
  for (Eigen::Index i = 0; i < sv.size(); ++i) out[static_cast<size_t>(i)] = sv(i);
  return out;
}

}  // namespace uent
