// Python bindings for the core library: gates, separability residuals,
// entropies, the counterexample searches and the sampling helpers, with
// numpy arrays at the boundary and plain dicts for structured results.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uent/de.hpp"
#include "uent/decomp.hpp"
#include "uent/gates.hpp"
#include "uent/report.hpp"
#include "uent/sampling.hpp"
#include "uent/separability.hpp"
#include "uent/version.hpp"

namespace py = pybind11;
using uent::BipartiteShape;
using uent::Complex;
using uent::ComplexMatrix;
using uent::ProductState;
using uent::PureState;
using uent::UnitaryGate;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix matrix_from_array(const CArray& arr) {
  if (arr.ndim() != 2) throw uent::ShapeMismatch("expected a 2-D complex array");
  const int rows = static_cast<int>(arr.shape(0));
  const int cols = static_cast<int>(arr.shape(1));
  ComplexMatrix m(rows, cols);
  auto r = arr.unchecked<2>();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = r(i, j);
  return m;
}

py::array_t<Complex> array_from_matrix(const ComplexMatrix& m) {
  py::array_t<Complex> out({m.rows(), m.cols()});
  auto w = out.mutable_unchecked<2>();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return out;
}

py::array_t<Complex> array_from_amplitudes(const std::vector<Complex>& v) {
  py::array_t<Complex> out(static_cast<py::ssize_t>(v.size()));
  auto w = out.mutable_unchecked<1>();
  for (size_t i = 0; i < v.size(); ++i) w(static_cast<py::ssize_t>(i)) = v[i];
  return out;
}

PureState state_from_array(const CArray& arr) {
  if (arr.ndim() != 1) throw uent::ShapeMismatch("expected a 1-D complex array");
  auto r = arr.unchecked<1>();
  std::vector<Complex> amps(static_cast<size_t>(arr.shape(0)));
  for (py::ssize_t i = 0; i < arr.shape(0); ++i) amps[static_cast<size_t>(i)] = r(i);
  return PureState(std::move(amps));
}

// Gates arrive either as a builtin name / gate file path or as a square
// complex matrix.
UnitaryGate resolve_gate(const py::object& ref) {
  if (py::isinstance<py::str>(ref)) {
    const std::string name = ref.cast<std::string>();
    try {
      return uent::builtin(name);
    } catch (const uent::UnknownGate&) {
      if (std::filesystem::exists(name)) return uent::load_gate_file(name);
      throw;
    }
  }
  ComplexMatrix m = matrix_from_array(ref.cast<CArray>());
  if (m.rows() != m.cols()) throw uent::ShapeMismatch("gate matrix must be square");
  if (!uent::is_unitary(m, uent::tol::TOL_UNITARY))
    throw uent::NotUnitary("gate matrix is not unitary");
  return UnitaryGate{"custom", std::move(m), std::nullopt, {"python matrix", "", "python"}};
}

BipartiteShape resolve_shape(const UnitaryGate& g, int m, int n) {
  if ((m == 0) != (n == 0)) throw uent::ShapeMismatch("pass m and n together");
  if (m != 0) {
    BipartiteShape shape(m, n);
    if (shape.dim() != g.dim())
      throw uent::ShapeMismatch("m * n does not match the gate dimension");
    return shape;
  }
  if (g.shape) return *g.shape;
  throw uent::ShapeUnknown("gate '" + g.label + "' has no default shape; pass m and n");
}

uent::DeConfig make_config(std::uint64_t seed, long long budget, int restarts, int population,
                           double weight_f, double crossover_cr, double residual_tol,
                           double entropy_tol) {
  uent::DeConfig cfg;
  cfg.seed = seed;
  cfg.max_evals = budget;
  cfg.restarts = restarts;
  cfg.population = population;
  cfg.weight_f = weight_f;
  cfg.crossover_cr = crossover_cr;
  cfg.residual_tol = residual_tol;
  cfg.entropy_tol = entropy_tol;
  cfg.validate();
  return cfg;
}

py::dict verdict_to_dict(const uent::Verdict& v) {
  py::dict d;
  if (const auto* ce = std::get_if<uent::CounterexampleFound>(&v)) {
    d["verdict"] = "counterexample_found";
    d["residual"] = ce->residual;
    d["entanglement"] = ce->entanglement;
    d["evals_used"] = ce->evals_used;
    d["input_a"] = array_from_amplitudes(ce->input.factor_a.amplitudes());
    d["input_b"] = array_from_amplitudes(ce->input.factor_b.amplitudes());
  } else if (const auto* sb = std::get_if<uent::SurvivedBudget>(&v)) {
    d["verdict"] = "survived_budget";
    d["best_residual"] = sb->best_residual;
    d["best_entanglement"] = sb->best_entanglement;
    d["evals_used"] = sb->evals_used;
    d["input_a"] = array_from_amplitudes(sb->best_input.factor_a.amplitudes());
    d["input_b"] = array_from_amplitudes(sb->best_input.factor_b.amplitudes());
  } else {
    const auto& rej = std::get<uent::RejectedByColumnFilter>(v);
    d["verdict"] = "rejected_by_column_filter";
    d["column"] = rej.column;
    d["residual"] = rej.residual;
  }
  return d;
}

py::dict gate_to_dict(const UnitaryGate& g) {
  py::dict d;
  d["label"] = g.label;
  d["matrix"] = array_from_matrix(g.matrix);
  if (g.shape) {
    d["m"] = g.shape->m;
    d["n"] = g.shape->n;
  } else {
    d["m"] = py::none();
    d["n"] = py::none();
  }
  d["expression"] = g.provenance.expression;
  d["sqrt_branch"] = g.provenance.sqrt_branch;
  d["source"] = g.provenance.source;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "universal-entangler gate testing toolkit";
  m.attr("__version__") = uent::kVersion;
  m.attr("RNG_ALGORITHM") = uent::kRngAlgorithm;

  py::register_exception<uent::Error>(m, "UentError", PyExc_ValueError);

  m.def("builtin_gates", &uent::builtin_names, "Names of all builtin gates.");

  m.def(
      "gate",
      [](const py::object& ref) { return gate_to_dict(resolve_gate(ref)); },
      py::arg("gate"),
      "Resolve a builtin name, gate file path or matrix into a gate dict.");

  m.def(
      "gate_matrix",
      [](const py::object& ref) { return array_from_matrix(resolve_gate(ref).matrix); },
      py::arg("gate"), "Matrix of a builtin gate or gate file.");

  m.def(
      "apply_gate",
      [](const py::object& ref, const CArray& state) {
        const UnitaryGate g = resolve_gate(ref);
        return array_from_amplitudes(
            uent::apply_gate(g, state_from_array(state)).amplitudes());
      },
      py::arg("gate"), py::arg("state"), "Apply a gate to a flat state vector.");

  m.def(
      "state_residual",
      [](const CArray& state, int m_, int n_) {
        return uent::state_kron_residual(state_from_array(state), BipartiteShape(m_, n_)).total;
      },
      py::arg("state"), py::arg("m"), py::arg("n"),
      "Sum of |2x2 minors| of the m x n coefficient matrix (0 iff product).");

  m.def(
      "max_minor",
      [](const CArray& state, int m_, int n_) {
        return uent::state_kron_residual(state_from_array(state), BipartiteShape(m_, n_))
            .max_minor;
      },
      py::arg("state"), py::arg("m"), py::arg("n"),
      "Largest |2x2 minor| of the coefficient matrix.");

  m.def(
      "schmidt_coefficients",
      [](const CArray& state, int m_, int n_) {
        return uent::schmidt_coefficients(state_from_array(state), BipartiteShape(m_, n_));
      },
      py::arg("state"), py::arg("m"), py::arg("n"),
      "Schmidt coefficients (descending singular values).");

  m.def(
      "entanglement_entropy",
      [](const CArray& state, int m_, int n_, double log_base) {
        return uent::entanglement_entropy(state_from_array(state), BipartiteShape(m_, n_),
                                          log_base);
      },
      py::arg("state"), py::arg("m"), py::arg("n"), py::arg("log_base") = std::numbers::e,
      "Entropy of the squared Schmidt coefficients in the given log base.");

  m.def(
      "is_separable",
      [](const CArray& state, int m_, int n_, double tol) {
        return uent::is_separable_state(state_from_array(state), BipartiteShape(m_, n_), tol);
      },
      py::arg("state"), py::arg("m"), py::arg("n"),
      py::arg("tol") = uent::tol::DEFAULT_SEPARABILITY_TOL,
      "Dual-criterion separability decision (minor residual + Schmidt check).");

  m.def(
      "split_residual",
      [](const CArray& state, const std::vector<int>& dims, const std::vector<int>& side_a) {
        const uent::SplitMask mask{dims, side_a};
        const uent::ResidualReport rep =
            uent::multipartite_split_residual(state_from_array(state), mask);
        py::dict d;
        d["total"] = rep.total;
        d["max_minor"] = rep.max_minor;
        d["minor_count"] = rep.minor_count;
        return d;
      },
      py::arg("state"), py::arg("dims"), py::arg("side_a"),
      "Minor residual across a bipartition of a multi-factor state.");

  m.def(
      "operator_residual",
      [](const py::object& ref, int m_, int n_) {
        const UnitaryGate g = resolve_gate(ref);
        const BipartiteShape shape = resolve_shape(g, m_, n_);
        return uent::operator_kron_residual(g, shape).total;
      },
      py::arg("gate"), py::arg("m") = 0, py::arg("n") = 0,
      "Realignment residual of a gate (0 iff the gate is a tensor product).");

  m.def(
      "column_filter",
      [](const py::object& ref, int m_, int n_, double tol) {
        const UnitaryGate g = resolve_gate(ref);
        const BipartiteShape shape = resolve_shape(g, m_, n_);
        const uent::ColumnFilterReport rep = uent::column_separability_filter(g, shape, tol);
        py::dict d;
        d["pass"] = rep.pass;
        d["column"] = rep.column;
        d["residual"] = rep.residual;
        return d;
      },
      py::arg("gate"), py::arg("m") = 0, py::arg("n") = 0,
      py::arg("tol") = uent::tol::DEFAULT_SEPARABILITY_TOL,
      "Necessary-condition screen: every gate column must be entangled.");

  m.def(
      "counterexample_search",
      [](const py::object& ref, int m_, int n_, std::uint64_t seed, long long budget,
         int restarts, int population, double weight_f, double crossover_cr,
         double residual_tol, double entropy_tol, bool skip_filter) {
        const UnitaryGate g = resolve_gate(ref);
        const BipartiteShape shape = resolve_shape(g, m_, n_);
        const uent::DeConfig cfg = make_config(seed, budget, restarts, population, weight_f,
                                               crossover_cr, residual_tol, entropy_tol);
        return verdict_to_dict(uent::counterexample_search(g, shape, cfg, skip_filter));
      },
      py::arg("gate"), py::arg("m") = 0, py::arg("n") = 0, py::arg("seed") = 1,
      py::arg("budget") = 1'000'000, py::arg("restarts") = 8, py::arg("population") = 40,
      py::arg("weight_f") = 0.7, py::arg("crossover_cr") = 0.9,
      py::arg("residual_tol") = uent::tol::DEFAULT_RESIDUAL_TOL,
      py::arg("entropy_tol") = uent::tol::DEFAULT_ENTROPY_TOL, py::arg("skip_filter") = false,
      "Search for a product input with separable image under the gate.");

  m.def(
      "min_entanglement",
      [](const py::object& ref, int m_, int n_, std::uint64_t seed, long long budget,
         int restarts, int population, double weight_f, double crossover_cr,
         double residual_tol, double entropy_tol, double log_base) {
        const UnitaryGate g = resolve_gate(ref);
        const BipartiteShape shape = resolve_shape(g, m_, n_);
        const uent::DeConfig cfg = make_config(seed, budget, restarts, population, weight_f,
                                               crossover_cr, residual_tol, entropy_tol);
        const uent::MinEntanglementResult res =
            uent::min_entanglement_search(g, shape, cfg, log_base);
        py::dict d;
        d["best_entanglement"] = res.best_entanglement;
        d["best_residual"] = res.best_residual;
        d["evals_used"] = res.evals_used;
        d["input_a"] = array_from_amplitudes(res.best_input.factor_a.amplitudes());
        d["input_b"] = array_from_amplitudes(res.best_input.factor_b.amplitudes());
        return d;
      },
      py::arg("gate"), py::arg("m") = 0, py::arg("n") = 0, py::arg("seed") = 1,
      py::arg("budget") = 1'000'000, py::arg("restarts") = 8, py::arg("population") = 40,
      py::arg("weight_f") = 0.7, py::arg("crossover_cr") = 0.9,
      py::arg("residual_tol") = uent::tol::DEFAULT_RESIDUAL_TOL,
      py::arg("entropy_tol") = uent::tol::DEFAULT_ENTROPY_TOL,
      py::arg("log_base") = std::numbers::e,
      "Minimize output entanglement over product inputs.");

  m.def(
      "entanglement_distribution",
      [](const py::object& ref, int m_, int n_, long long samples, int bins, double log_base,
         std::uint64_t seed) {
        const UnitaryGate g = resolve_gate(ref);
        const BipartiteShape shape = resolve_shape(g, m_, n_);
        const uent::DistributionReport rep =
            uent::entanglement_distribution(g, shape, samples, bins, log_base, seed);
        py::dict d;
        d["gate_label"] = rep.gate_label;
        d["m"] = rep.m;
        d["n"] = rep.n;
        d["seed"] = rep.seed;
        d["samples"] = rep.samples;
        d["log_base"] = rep.log_base;
        d["mean"] = rep.mean;
        d["std_dev"] = rep.std_dev;
        d["min"] = rep.min_value;
        d["max"] = rep.max_value;
        std::vector<double> lo, hi;
        std::vector<long long> counts;
        for (const auto& b : rep.bins) {
          lo.push_back(b.lo);
          hi.push_back(b.hi);
          counts.push_back(b.count);
        }
        d["bin_lo"] = lo;
        d["bin_hi"] = hi;
        d["counts"] = counts;
        return d;
      },
      py::arg("gate"), py::arg("m") = 0, py::arg("n") = 0, py::arg("samples") = 100'000,
      py::arg("bins") = 60, py::arg("log_base") = std::numbers::e, py::arg("seed") = 1,
      "Entanglement statistics over Haar-random product inputs.");

  m.def("kappa_state",
        []() { return array_from_amplitudes(uent::kappa_state().amplitudes()); },
        "The three-qutrit fixture state with balanced bipartitions.");

  m.def(
      "kappa_splits",
      [](double log_base) {
        const PureState k = uent::kappa_state();
        py::dict d;
        const char* names[3] = {"0|12", "1|02", "2|01"};
        for (int pos = 0; pos < 3; ++pos) {
          const uent::SplitMask mask{{3, 3, 3}, {pos}};
          const uent::ResidualReport rep = uent::multipartite_split_residual(k, mask);
          const ComplexMatrix mat = uent::split_coefficient_matrix(k, mask);
          py::dict row;
          row["residual"] = rep.total;
          row["max_minor"] = rep.max_minor;
          row["minor_count"] = rep.minor_count;
          row["entropy"] =
              uent::entropy_from_singular_values(uent::singular_values(mat), log_base);
          d[names[pos]] = row;
        }
        return d;
      },
      py::arg("log_base") = std::numbers::e,
      "Residual, max minor and entropy of the fixture state's three splits.");

  m.def(
      "haar_state",
      [](int dim, std::uint64_t master_seed, std::uint64_t stream) {
        return array_from_amplitudes(
            uent::haar_state(dim, {master_seed, stream}).amplitudes());
      },
      py::arg("dim"), py::arg("master_seed"), py::arg("stream") = 0,
      "Haar-random pure state, reproducible per (master_seed, stream).");

  m.def(
      "random_product_state",
      [](int m_, int n_, std::uint64_t master_seed, std::uint64_t stream) {
        const ProductState p =
            uent::random_product_state(BipartiteShape(m_, n_), {master_seed, stream});
        return py::make_tuple(array_from_amplitudes(p.factor_a.amplitudes()),
                              array_from_amplitudes(p.factor_b.amplitudes()));
      },
      py::arg("m"), py::arg("n"), py::arg("master_seed"), py::arg("stream") = 0,
      "Pair of Haar-random factors, reproducible per (master_seed, stream).");

  m.def(
      "haar_unitary",
      [](int dim, std::uint64_t master_seed, std::uint64_t stream) {
        return array_from_matrix(uent::haar_unitary(dim, {master_seed, stream}).matrix);
      },
      py::arg("dim"), py::arg("master_seed"), py::arg("stream") = 0,
      "Haar-random unitary matrix, reproducible per (master_seed, stream).");

  m.def(
      "principal_sqrt",
      [](const CArray& u) {
        return array_from_matrix(uent::principal_sqrt_unitary(matrix_from_array(u)));
      },
      py::arg("unitary"),
      "Principal square root of a unitary (eigenphases halved into (-pi/2, pi/2]).");

  m.def(
      "is_unitary",
      [](const CArray& u, double tol) { return uent::is_unitary(matrix_from_array(u), tol); },
      py::arg("matrix"), py::arg("tol") = uent::tol::TOL_UNITARY,
      "Whether the matrix is unitary within the entrywise tolerance.");

  m.def(
      "write_gate_file",
      [](const py::object& ref, const std::string& path, int m_, int n_) {
        UnitaryGate g = resolve_gate(ref);
        if (m_ != 0 || n_ != 0) g.shape = resolve_shape(g, m_, n_);
        uent::write_gate_file(g, path);
      },
      py::arg("gate"), py::arg("path"), py::arg("m") = 0, py::arg("n") = 0,
      "Write a gate to a JSON gate file (pass m and n for a bare matrix).");

  m.def(
      "load_gate_file",
      [](const std::string& path) { return gate_to_dict(uent::load_gate_file(path)); },
      py::arg("path"), "Load and validate a JSON gate file.");
}
