#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "uent/gates.hpp"
#include "uent/sampling.hpp"
#include "uent/states.hpp"
#include "uent/tolerances.hpp"

namespace uent {

// Knobs of the differential-evolution searches. max_evals is the TOTAL
// objective budget of a search; it is split evenly across restarts.
struct DeConfig {
  int population = 40;
  double weight_f = 0.7;      // differential weight F
  double crossover_cr = 0.9;  // crossover probability CR
  long long max_evals = 1'000'000;
  int restarts = 8;
  std::uint64_t seed = 1;
  double residual_tol = tol::DEFAULT_RESIDUAL_TOL;
  double entropy_tol = tol::DEFAULT_ENTROPY_TOL;

  void validate() const;  // throws ShapeMismatch on out-of-range settings
};

// Flat real parameter vector in [-1, 1]^dim.
struct Genome {
  std::vector<double> values;
};

using Objective = std::function<double(std::span<const double>)>;

struct DeResult {
  Genome best;
  double best_value = 0.0;
  long long evals_used = 0;
};

// Plain DE/rand/1/bin minimizer over [-1, 1]^dim, seeded by cfg.seed with
// budget cfg.max_evals (cfg.restarts is ignored here). Stops early once the
// best value drops to early_exit or below. Deterministic for fixed inputs.
DeResult de_minimize(const Objective& f, int dimension, const DeConfig& cfg,
                     double early_exit);

// Genome layout for product-state searches: 2(m+n) reals, the interleaved
// real/imag parts of the C^m factor then the C^n factor; each factor is
// normalized during decoding. Throws InvalidGenome when a factor's norm is
// below MIN_FACTOR_NORM, ShapeMismatch on wrong length.
ProductState decode_product_state(const Genome& g, const BipartiteShape& shape);

// Objective: 2x2-minor residual of U·(a ⊗ b) for the decoded genome.
// Undecodable genomes score GENOME_PENALTY instead of throwing.
Objective separability_objective(const UnitaryGate& g, const BipartiteShape& shape);

// Objective: entanglement entropy of U·(a ⊗ b) in the given log base.
Objective entanglement_objective(const UnitaryGate& g, const BipartiteShape& shape,
                                 double log_base = std::numbers::e);

// Deterministic per-restart seed derivation from the master seed.
std::uint64_t restart_seed(std::uint64_t master_seed, int restart_index);

// Result of one independent DE restart minimizing the separability
// residual. best_residual / best_entanglement describe the gate output at
// the restart's best input (entropy in base e).
struct RestartOutcome {
  int restart_index = 0;
  std::uint64_t seed = 0;
  long long evals_used = 0;
  double best_residual = 0.0;
  double best_entanglement = 0.0;
  ProductState best_input;
};

// Runs restart `restart_index` of a counterexample search: budget
// cfg.max_evals / cfg.restarts, seed restart_seed(cfg.seed, index), early
// exit at cfg.residual_tol / 10. Restarts are independent, so any subset
// can be run in any order and merged.
RestartOutcome run_restart(const UnitaryGate& g, const BipartiteShape& shape,
                           const DeConfig& cfg, int restart_index);

// A product input whose image under the gate is separable: residual below
// residual_tol, confirmed by output entropy below entropy_tol.
struct CounterexampleFound {
  ProductState input;
  double residual = 0.0;
  double entanglement = 0.0;
  long long evals_used = 0;
};

// No counterexample within budget; carries the best near-miss.
struct SurvivedBudget {
  ProductState best_input;
  double best_residual = 0.0;
  double best_entanglement = 0.0;
  long long evals_used = 0;
};

// The gate never reached the search: one of its columns is separable.
struct RejectedByColumnFilter {
  int column = -1;
  double residual = 0.0;
};

using Verdict = std::variant<CounterexampleFound, SurvivedBudget, RejectedByColumnFilter>;

// Folds restart outcomes (sorted by index internally) into a verdict:
// the lowest-indexed restart meeting both counterexample thresholds wins,
// with evals summed over all restarts up to it; otherwise SurvivedBudget
// with the overall best residual and the full eval count.
Verdict verdict_from_outcomes(const DeConfig& cfg,
                              std::vector<RestartOutcome> outcomes);

// Full search: column filter first (unless skip_filter), then sequential
// restarts with an early stop once a counterexample is confirmed.
Verdict counterexample_search(const UnitaryGate& g, const BipartiteShape& shape,
                              const DeConfig& cfg, bool skip_filter = false);

// Lowest output entanglement found within budget (same restart scheme,
// entropy objective, early exit at cfg.entropy_tol / 10).
struct MinEntanglementResult {
  double best_entanglement = 0.0;  // in the requested log base
  double best_residual = 0.0;
  ProductState best_input;
  long long evals_used = 0;
};

MinEntanglementResult min_entanglement_search(const UnitaryGate& g,
                                              const BipartiteShape& shape,
                                              const DeConfig& cfg,
                                              double log_base = std::numbers::e);

}  // namespace uent
