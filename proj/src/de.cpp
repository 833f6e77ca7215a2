#include "uent/de.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uent/decomp.hpp"
#include "uent/separability.hpp"

namespace uent {

namespace {

constexpr double kNeverExit = -std::numeric_limits<double>::infinity();

double clamp_sym(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

// Shared decoding core used by the hot objectives: writes the normalized
// factors without constructing states. Returns false if a factor norm is
// too small to normalize.
bool decode_raw(std::span<const double> x, int m, int n, std::vector<Complex>& a,
                std::vector<Complex>& b) {
  a.resize(static_cast<size_t>(m));
  b.resize(static_cast<size_t>(n));
  double na = 0.0, nb = 0.0;
  for (int i = 0; i < m; ++i) {
    a[static_cast<size_t>(i)] = Complex(x[static_cast<size_t>(2 * i)],
                                        x[static_cast<size_t>(2 * i + 1)]);
    na += std::norm(a[static_cast<size_t>(i)]);
  }
  const int off = 2 * m;
  for (int j = 0; j < n; ++j) {
    b[static_cast<size_t>(j)] = Complex(x[static_cast<size_t>(off + 2 * j)],
                                        x[static_cast<size_t>(off + 2 * j + 1)]);
    nb += std::norm(b[static_cast<size_t>(j)]);
  }
  na = std::sqrt(na);
  nb = std::sqrt(nb);
  if (na < tol::MIN_FACTOR_NORM || nb < tol::MIN_FACTOR_NORM) return false;
  for (Complex& z : a) z /= na;
  for (Complex& z : b) z /= nb;
  return true;
}

// y = U · (a ⊗ b) with U given by its row-major entries.
void apply_to_product(const ComplexMatrix& u, const std::vector<Complex>& a,
                      const std::vector<Complex>& b, std::vector<Complex>& y) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  const int d = m * n;
  y.assign(static_cast<size_t>(d), Complex(0.0, 0.0));
  for (int c = 0; c < d; ++c) {
    const Complex xc = a[static_cast<size_t>(c / n)] * b[static_cast<size_t>(c % n)];
    for (int r = 0; r < d; ++r) y[static_cast<size_t>(r)] += u(r, c) * xc;
  }
}

double residual_of_vector(const std::vector<Complex>& y, int m, int n) {
  double total = 0.0;
  for (int i1 = 0; i1 < m; ++i1)
    for (int i2 = i1 + 1; i2 < m; ++i2)
      for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = j1 + 1; j2 < n; ++j2)
          total += fast_abs(y[static_cast<size_t>(i1 * n + j1)] *
                                y[static_cast<size_t>(i2 * n + j2)] -
                            y[static_cast<size_t>(i1 * n + j2)] *
                                y[static_cast<size_t>(i2 * n + j1)]);
  return total;
}

}  // namespace

void DeConfig::validate() const {
  if (population < 4) throw ShapeMismatch("population must be at least 4");
  if (!(weight_f > 0.0) || weight_f >= 2.0)
    throw ShapeMismatch("weight_f must lie in (0, 2)");
  if (crossover_cr < 0.0 || crossover_cr > 1.0)
    throw ShapeMismatch("crossover_cr must lie in [0, 1]");
  if (max_evals < 1) throw ShapeMismatch("max_evals must be positive");
  if (restarts < 1) throw ShapeMismatch("restarts must be positive");
  if (!(residual_tol > 0.0)) throw ShapeMismatch("residual_tol must be positive");
  if (!(entropy_tol > 0.0)) throw ShapeMismatch("entropy_tol must be positive");
}

DeResult de_minimize(const Objective& f, int dimension, const DeConfig& cfg,
                     double early_exit) {
  cfg.validate();
  if (dimension < 1) throw ShapeMismatch("objective dimension must be positive");

  SeededRng rng(cfg.seed);
  const int np = cfg.population;
  const size_t dim = static_cast<size_t>(dimension);

  std::vector<std::vector<double>> pop(static_cast<size_t>(np));
  std::vector<double> vals(static_cast<size_t>(np),
                           std::numeric_limits<double>::infinity());

  DeResult out;
  out.best_value = std::numeric_limits<double>::infinity();

  auto note_best = [&](const std::vector<double>& g, double v) {
    if (v < out.best_value) {
      out.best_value = v;
      out.best.values = g;
    }
  };

  for (int i = 0; i < np && out.evals_used < cfg.max_evals; ++i) {
    auto& g = pop[static_cast<size_t>(i)];
    g.resize(dim);
    for (size_t j = 0; j < dim; ++j) g[j] = rng.uniform_sym();
    vals[static_cast<size_t>(i)] = f(g);
    ++out.evals_used;
    note_best(g, vals[static_cast<size_t>(i)]);
    if (out.best_value <= early_exit) return out;
  }
  // Genomes the budget never reached stay at +inf and lose every selection.
  for (int i = 0; i < np; ++i)
    if (pop[static_cast<size_t>(i)].empty()) {
      auto& g = pop[static_cast<size_t>(i)];
      g.resize(dim);
      for (size_t j = 0; j < dim; ++j) g[j] = rng.uniform_sym();
    }

  std::vector<double> trial(dim);
  while (out.evals_used < cfg.max_evals && out.best_value > early_exit) {
    for (int i = 0; i < np; ++i) {
      if (out.evals_used >= cfg.max_evals || out.best_value <= early_exit) break;

      const auto npu = static_cast<std::uint64_t>(np);
      int r1, r2, r3;
      do r1 = static_cast<int>(rng.below(npu)); while (r1 == i);
      do r2 = static_cast<int>(rng.below(npu)); while (r2 == i || r2 == r1);
      do r3 = static_cast<int>(rng.below(npu)); while (r3 == i || r3 == r1 || r3 == r2);

      const size_t jrand = rng.below(dim);
      const auto& xi = pop[static_cast<size_t>(i)];
      const auto& x1 = pop[static_cast<size_t>(r1)];
      const auto& x2 = pop[static_cast<size_t>(r2)];
      const auto& x3 = pop[static_cast<size_t>(r3)];
      for (size_t j = 0; j < dim; ++j) {
        const bool cross = rng.uniform01() < cfg.crossover_cr;
        trial[j] = (cross || j == jrand)
                       ? clamp_sym(x1[j] + cfg.weight_f * (x2[j] - x3[j]))
                       : xi[j];
      }

      const double tv = f(trial);
      ++out.evals_used;
      if (tv <= vals[static_cast<size_t>(i)]) {
        pop[static_cast<size_t>(i)] = trial;
        vals[static_cast<size_t>(i)] = tv;
        note_best(trial, tv);
      }
    }
  }
  return out;
}

ProductState decode_product_state(const Genome& g, const BipartiteShape& shape) {
  if (g.values.size() != static_cast<size_t>(2 * (shape.m + shape.n)))
    throw ShapeMismatch("genome length must be 2(m+n)");
  std::vector<Complex> a, b;
  if (!decode_raw(g.values, shape.m, shape.n, a, b))
    throw InvalidGenome("a genome factor has effectively zero norm");
  return ProductState{PureState(std::move(a)), PureState(std::move(b))};
}

Objective separability_objective(const UnitaryGate& g, const BipartiteShape& shape) {
  if (g.dim() != shape.dim())
    throw ShapeMismatch("gate dimension does not match bipartite shape");
  // The matrix is copied into the closure so the objective outlives the gate.
  return [u = g.matrix, m = shape.m, n = shape.n,
          a = std::vector<Complex>(), b = std::vector<Complex>(),
          y = std::vector<Complex>()](std::span<const double> x) mutable -> double {
    if (x.size() != static_cast<size_t>(2 * (m + n))) return tol::GENOME_PENALTY;
    if (!decode_raw(x, m, n, a, b)) return tol::GENOME_PENALTY;
    apply_to_product(u, a, b, y);
    return residual_of_vector(y, m, n);
  };
}

Objective entanglement_objective(const UnitaryGate& g, const BipartiteShape& shape,
                                 double log_base) {
  if (g.dim() != shape.dim())
    throw ShapeMismatch("gate dimension does not match bipartite shape");
  return [u = g.matrix, m = shape.m, n = shape.n, log_base,
          a = std::vector<Complex>(), b = std::vector<Complex>(),
          y = std::vector<Complex>()](std::span<const double> x) mutable -> double {
    if (x.size() != static_cast<size_t>(2 * (m + n))) return tol::GENOME_PENALTY;
    if (!decode_raw(x, m, n, a, b)) return tol::GENOME_PENALTY;
    apply_to_product(u, a, b, y);
    ComplexMatrix c(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) c(i, j) = y[static_cast<size_t>(i * n + j)];
    const std::vector<double> sigma = singular_values(c);
    return entropy_from_singular_values(sigma, log_base);
  };
}

std::uint64_t restart_seed(std::uint64_t master_seed, int restart_index) {
  return mix_seed(master_seed, static_cast<std::uint64_t>(restart_index));
}

namespace {

// Budget slice of one restart under the total-budget convention.
long long restart_budget(const DeConfig& cfg) {
  return std::max<long long>(cfg.max_evals / cfg.restarts, 1);
}

// Gate output data for a decoded input: residual and base-e entropy.
struct OutputStats {
  double residual;
  double entropy;
};

OutputStats output_stats(const UnitaryGate& g, const BipartiteShape& shape,
                         const ProductState& input) {
  const PureState out = apply_gate(g, input.flatten());
  return {state_kron_residual(out, shape).total,
          entanglement_entropy(out, shape)};
}

}  // namespace

RestartOutcome run_restart(const UnitaryGate& g, const BipartiteShape& shape,
                           const DeConfig& cfg, int restart_index) {
  if (restart_index < 0 || restart_index >= cfg.restarts)
    throw ShapeMismatch("restart index out of range");
  DeConfig local = cfg;
  local.seed = restart_seed(cfg.seed, restart_index);
  local.max_evals = restart_budget(cfg);

  const Objective f = separability_objective(g, shape);
  const DeResult r = de_minimize(f, 2 * (shape.m + shape.n), local,
                                 cfg.residual_tol / 10.0);

  const ProductState input = decode_product_state(r.best, shape);
  const OutputStats stats = output_stats(g, shape, input);
  return RestartOutcome{restart_index, local.seed, r.evals_used, stats.residual,
                        stats.entropy, input};
}

Verdict verdict_from_outcomes(const DeConfig& cfg, std::vector<RestartOutcome> outcomes) {
  if (outcomes.empty()) throw ShapeMismatch("no restart outcomes to fold");
  std::sort(outcomes.begin(), outcomes.end(),
            [](const RestartOutcome& a, const RestartOutcome& b) {
              return a.restart_index < b.restart_index;
            });
  long long evals = 0;
  const RestartOutcome* best = nullptr;
  for (const RestartOutcome& o : outcomes) {
    evals += o.evals_used;
    if (o.best_residual < cfg.residual_tol && o.best_entanglement < cfg.entropy_tol)
      return CounterexampleFound{o.best_input, o.best_residual, o.best_entanglement,
                                 evals};
    if (best == nullptr || o.best_residual < best->best_residual) best = &o;
  }
  return SurvivedBudget{best->best_input, best->best_residual, best->best_entanglement,
                        evals};
}

Verdict counterexample_search(const UnitaryGate& g, const BipartiteShape& shape,
                              const DeConfig& cfg, bool skip_filter) {
  cfg.validate();
  if (!skip_filter) {
    const ColumnFilterReport rep = column_separability_filter(g, shape);
    if (!rep.pass) return RejectedByColumnFilter{rep.column, rep.residual};
  }
  std::vector<RestartOutcome> outcomes;
  outcomes.reserve(static_cast<size_t>(cfg.restarts));
  for (int r = 0; r < cfg.restarts; ++r) {
    outcomes.push_back(run_restart(g, shape, cfg, r));
    const RestartOutcome& o = outcomes.back();
    if (o.best_residual < cfg.residual_tol && o.best_entanglement < cfg.entropy_tol)
      break;  // confirmed; later restarts cannot change the verdict
  }
  return verdict_from_outcomes(cfg, std::move(outcomes));
}

MinEntanglementResult min_entanglement_search(const UnitaryGate& g,
                                              const BipartiteShape& shape,
                                              const DeConfig& cfg, double log_base) {
  cfg.validate();
  const Objective f = entanglement_objective(g, shape, log_base);
  const int dim = 2 * (shape.m + shape.n);

  long long evals = 0;
  bool have = false;
  MinEntanglementResult out{0.0, 0.0,
                            ProductState{PureState::basis(shape.m, 0),
                                         PureState::basis(shape.n, 0)},
                            0};
  for (int r = 0; r < cfg.restarts; ++r) {
    DeConfig local = cfg;
    local.seed = restart_seed(cfg.seed, r);
    local.max_evals = restart_budget(cfg);
    const DeResult dr = de_minimize(f, dim, local, cfg.entropy_tol / 10.0);
    evals += dr.evals_used;
    if (!have || dr.best_value < out.best_entanglement) {
      const ProductState input = decode_product_state(dr.best, shape);
      const OutputStats stats = output_stats(g, shape, input);
      out.best_entanglement = dr.best_value;
      out.best_residual = stats.residual;
      out.best_input = input;
      have = true;
    }
    if (out.best_entanglement <= cfg.entropy_tol / 10.0) break;
  }
  out.evals_used = evals;
  return out;
}

}  // namespace uent
