#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "uent/decomp.hpp"
#include "uent/gates.hpp"
#include "uent/sampling.hpp"
#include "uent/separability.hpp"

using uent::BipartiteShape;
using uent::Complex;
using uent::ComplexMatrix;
using uent::ProductState;
using uent::PureState;

namespace {

PureState bell22() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState({s, 0.0, 0.0, s});
}

// Independent minor enumeration used as the test-side oracle: walks the
// amplitude vector directly (no reshape object) and accumulates
// |a[i1,j1]a[i2,j2] - a[i1,j2]a[i2,j1]| over row/column pairs.
double oracle_residual(const std::vector<Complex>& amp, int m, int n) {
  double total = 0.0;
  for (int i1 = 0; i1 < m - 1; ++i1)
    for (int i2 = i1 + 1; i2 < m; ++i2)
      for (int j1 = 0; j1 < n - 1; ++j1)
        for (int j2 = j1 + 1; j2 < n; ++j2) {
          const Complex det = amp[(size_t)(i1 * n + j1)] * amp[(size_t)(i2 * n + j2)] -
                              amp[(size_t)(i1 * n + j2)] * amp[(size_t)(i2 * n + j1)];
          total += std::abs(det);
        }
  return total;
}

}  // namespace

TEST_CASE("Bell state residual: one minor of modulus one half") {
  const uent::ResidualReport rep =
      uent::state_kron_residual(bell22(), BipartiteShape(2, 2));
  CHECK(rep.minor_count == 1);
  CHECK(rep.total == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.max_minor == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(rep.minors.size() == 1);
  CHECK(rep.minors[0].i1 == 0);
  CHECK(rep.minors[0].i2 == 1);
  CHECK(rep.minors[0].j1 == 0);
  CHECK(rep.minors[0].j2 == 1);
}

TEST_CASE("product states have vanishing residual, entangled ones do not") {
  const BipartiteShape shape(3, 4);
  for (std::uint64_t k = 0; k < 100; ++k) {
    const ProductState p = uent::random_product_state(shape, {31, k});
    const uent::ResidualReport rep = uent::state_kron_residual(p.flatten(), shape);
    CHECK(rep.total < 1e-12);
  }
  for (std::uint64_t k = 0; k < 100; ++k) {
    const PureState psi = uent::haar_state(12, {32, k});
    CHECK(uent::state_kron_residual(psi, shape).total > 1e-3);
  }
}

TEST_CASE("residual agrees with the independent enumeration oracle") {
  const BipartiteShape shape(4, 4);
  for (std::uint64_t k = 0; k < 25; ++k) {
    const PureState psi = uent::haar_state(16, {33, k});
    const double lib = uent::state_kron_residual(psi, shape).total;
    const double ora = oracle_residual(psi.amplitudes(), 4, 4);
    CHECK(lib == doctest::Approx(ora).epsilon(1e-13));
  }
}

TEST_CASE("minor list is lexicographic and has the closed-form count") {
  const PureState psi = uent::haar_state(12, {34, 0});
  const uent::ResidualReport rep = uent::state_kron_residual(psi, BipartiteShape(3, 4));
  CHECK(rep.minor_count == 18);  // C(3,2)·C(4,2)
  REQUIRE(rep.minors.size() == 18);
  for (size_t t = 1; t < rep.minors.size(); ++t) {
    const auto& a = rep.minors[t - 1];
    const auto& b = rep.minors[t];
    const auto ka = std::array{a.i1, a.i2, a.j1, a.j2};
    const auto kb = std::array{b.i1, b.i2, b.j1, b.j2};
    CHECK(ka < kb);
  }
  // The report total is the sum of its own minors.
  double sum = 0.0;
  for (const auto& t : rep.minors) sum += std::abs(t.value);
  CHECK(sum == doctest::Approx(rep.total).epsilon(1e-13));
}

TEST_CASE("dual criterion: minors and Schmidt rank agree on both classes") {
  for (const BipartiteShape shape : {BipartiteShape(3, 4), BipartiteShape(4, 4)}) {
    for (std::uint64_t k = 0; k < 200; ++k) {
      const ProductState p = uent::random_product_state(shape, {41, k});
      CHECK(uent::is_separable_state(p.flatten(), shape));
      const PureState psi = uent::haar_state(shape.dim(), {42, k});
      CHECK_FALSE(uent::is_separable_state(psi, shape));
    }
  }
}

TEST_CASE("split masks validate their structure") {
  using uent::SplitMask;
  CHECK_NOTHROW((SplitMask{{3, 3, 3}, {0}}).validate());
  CHECK_THROWS_AS((SplitMask{{3}, {0}}).validate(), uent::ShapeMismatch);
  CHECK_THROWS_AS((SplitMask{{3, 3}, {}}).validate(), uent::ShapeMismatch);
  CHECK_THROWS_AS((SplitMask{{3, 3}, {0, 1}}).validate(), uent::ShapeMismatch);
  CHECK_THROWS_AS((SplitMask{{3, 3, 3}, {3}}).validate(), uent::ShapeMismatch);
  CHECK_THROWS_AS((SplitMask{{3, 3, 3}, {1, 1}}).validate(), uent::ShapeMismatch);
  CHECK_THROWS_AS((SplitMask{{3, 1, 3}, {0}}).validate(), uent::ShapeMismatch);
}

TEST_CASE("the unique two-factor split reduces to the bipartite residual") {
  const PureState psi = uent::haar_state(12, {50, 1});
  const uent::ResidualReport direct = uent::state_kron_residual(psi, BipartiteShape(3, 4));
  const uent::ResidualReport via_split =
      uent::multipartite_split_residual(psi, {{3, 4}, {0}});
  CHECK(via_split.total == doctest::Approx(direct.total).epsilon(1e-14));
  CHECK(via_split.minor_count == direct.minor_count);
}

TEST_CASE("kappa state: every bipartition is far from separable") {
  const PureState k = uent::kappa_state();
  const double third = std::log(3.0);
  for (int pos = 0; pos < 3; ++pos) {
    const uent::SplitMask mask{{3, 3, 3}, {pos}};
    const uent::ResidualReport rep = uent::multipartite_split_residual(k, mask);
    CHECK(rep.minor_count == 108);  // C(3,2)·C(9,2)
    CHECK(rep.max_minor == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(rep.total == doctest::Approx(2.0).epsilon(1e-12));

    const ComplexMatrix mat = uent::split_coefficient_matrix(k, mask);
    const double h = uent::entropy_from_singular_values(uent::singular_values(mat));
    CHECK(h == doctest::Approx(third).epsilon(1e-10));
  }
}

TEST_CASE("split grouping both remaining positions matches the state layout") {
  // For side_a = {0} on dims {3,3,3} the rows are the first digit and the
  // columns run over the last two digits in order; spot-check one entry.
  const PureState k = uent::kappa_state();
  const ComplexMatrix mat = uent::split_coefficient_matrix(k, {{3, 3, 3}, {0}});
  REQUIRE(mat.rows() == 3);
  REQUIRE(mat.cols() == 9);
  const double c = 1.0 / std::sqrt(6.0);
  CHECK(uent::fast_abs(mat(1, 2 * 3 + 0) - Complex(c, 0.0)) < 1e-15);   // |120⟩
  CHECK(uent::fast_abs(mat(2, 0 * 3 + 2) - Complex(-c, 0.0)) < 1e-15);  // |202⟩
}

TEST_CASE("operator realignment: kron products flatten to rank one") {
  const uent::UnitaryGate a = uent::haar_unitary(3, {60, 0});
  const uent::UnitaryGate b = uent::haar_unitary(4, {60, 1});
  uent::UnitaryGate prod{"AxB", uent::kron(a.matrix, b.matrix), BipartiteShape(3, 4), {}};
  CHECK(uent::operator_kron_residual(prod, BipartiteShape(3, 4)).total < 1e-10);

  CHECK(uent::operator_kron_residual(uent::shift_x(12), BipartiteShape(3, 4)).total > 1e-3);
  CHECK(uent::operator_kron_residual(uent::fourier(12), BipartiteShape(3, 4)).total > 1e-3);
  CHECK(uent::operator_kron_residual(uent::hadamard_gate(), BipartiteShape(3, 4)).total >
        1e-3);
}

TEST_CASE("gamma condition matches the realignment verdict on operators") {
  const BipartiteShape shape(3, 4);
  const uent::UnitaryGate a = uent::haar_unitary(3, {61, 0});
  const uent::UnitaryGate b = uent::haar_unitary(4, {61, 1});
  const ComplexMatrix prod = uent::kron(a.matrix, b.matrix);
  CHECK(uent::gamma_condition_residual(prod, shape) < 1e-10);
  CHECK(uent::gamma_condition_residual(uent::fourier(12).matrix, shape) > 1e-3);
  CHECK(uent::gamma_condition_residual(uent::shift_x(12).matrix, shape) > 1e-3);
}

TEST_CASE("gamma condition separates product from entangled state projectors") {
  // For N = |ψ⟩⟨ψ| the gamma condition holds exactly when ψ is a product
  // state, mirroring the minor criterion on the state itself.
  const BipartiteShape shape(2, 2);
  auto projector = [](const PureState& s) {
    const int d = s.dim();
    ComplexMatrix n(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) n(i, j) = s[i] * std::conj(s[j]);
    return n;
  };
  CHECK(uent::gamma_condition_residual(projector(bell22()), shape) > 1e-2);

  const ProductState p = uent::random_product_state(shape, {62, 7});
  CHECK(uent::gamma_condition_residual(projector(p.flatten()), shape) < 1e-10);
}

TEST_CASE("column filter screens the expected gates") {
  const BipartiteShape s34(3, 4);

  // All Fourier columns factorize, so F12 fails immediately at column 0.
  const uent::ColumnFilterReport f12 =
      uent::column_separability_filter(uent::fourier(12), s34);
  CHECK_FALSE(f12.pass);
  CHECK(f12.column == 0);
  CHECK(f12.residual < 1e-12);

  // Monomial matrices (X, Z) have basis-vector columns.
  CHECK_FALSE(uent::column_separability_filter(uent::shift_x(12), s34).pass);
  CHECK_FALSE(uent::column_separability_filter(uent::clock_z(12), s34).pass);

  const uent::ColumnFilterReport uh =
      uent::column_separability_filter(uent::hadamard_gate(), s34);
  CHECK_FALSE(uh.pass);
  CHECK(uh.column == 0);

  // The candidates pass with a comfortable margin.
  const uent::ColumnFilterReport ue1 =
      uent::column_separability_filter(uent::candidate(uent::CandidateId::UE1), s34);
  CHECK(ue1.pass);
  CHECK(ue1.residual > 0.5);
}

TEST_CASE("failing filter columns really are counterexample images") {
  // A separable column c = U(e_i ⊗ e_j) means that basis product input maps
  // to a separable output; verify the full pipeline agrees.
  const BipartiteShape shape(3, 4);
  const uent::UnitaryGate g = uent::fourier(12);
  const uent::ColumnFilterReport rep = uent::column_separability_filter(g, shape);
  REQUIRE_FALSE(rep.pass);
  const int i = rep.column / shape.n;
  const int j = rep.column % shape.n;
  const ProductState input{PureState::basis(shape.m, i), PureState::basis(shape.n, j)};
  const PureState image = uent::apply_gate(g, input.flatten());
  CHECK(uent::state_kron_residual(image, shape).total < 1e-12);
  CHECK(uent::entanglement_entropy(image, shape) < 1e-8);
}
