#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uent/de.hpp"
#include "uent/gates.hpp"

namespace uent {

// One line of a JSONL result log. `kind` is "verdict" for the final outcome
// of a search, "restart" for a per-restart checkpoint (these make a run
// resumable), or "min_entanglement" for entropy-minimization results.
struct RunRecord {
  std::string kind;
  std::string gate_label;
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;  // master seed of the search
  int restarts = 0;
  long long evals_used = 0;
  std::string verdict;     // verdict records: counterexample_found /
                           // survived_budget / rejected_by_column_filter
  int restart_index = -1;  // restart records only
  double best_residual = 0.0;
  double best_entanglement = 0.0;
  int rejected_column = -1;  // rejected verdicts only
  bool has_state = false;    // whether the product input below is present
  std::vector<double> a_re, a_im, b_re, b_im;
  std::string sqrt_branch;  // branch rule of the gate, when it has one
  double log_base = 0.0;
  std::string rng_algorithm;
  std::string tool_version;
  std::string timestamp;  // RFC3339 UTC, second resolution
};

// Current time as RFC3339 UTC ("2026-01-02T03:04:05Z").
std::string now_rfc3339();

// Serialization is hand-formatted with %.17g so identical records give
// identical bytes; parsing accepts anything JSON-shaped.
std::string to_json_line(const RunRecord& r);
RunRecord run_record_from_json(const std::string& line);

void append_records(const std::string& path, const std::vector<RunRecord>& records);
std::vector<RunRecord> load_records(const std::string& path);

RunRecord make_restart_record(const UnitaryGate& g, const BipartiteShape& shape,
                              const DeConfig& cfg, const RestartOutcome& outcome);
RunRecord make_verdict_record(const UnitaryGate& g, const BipartiteShape& shape,
                              const DeConfig& cfg, const Verdict& verdict);
RunRecord make_min_ent_record(const UnitaryGate& g, const BipartiteShape& shape,
                              const DeConfig& cfg, const MinEntanglementResult& res,
                              double log_base);

// Rebuilds a restart outcome from its checkpoint record (for resuming).
RestartOutcome outcome_from_record(const RunRecord& r);

// Gate file: {"label": ..., "m": ..., "n": ..., "matrix": [[[re, im], ...], ...]}.
// Writing requires the gate to carry a shape; loading validates shape,
// sizes, finiteness and unitarity (NotUnitary) and rejects anything
// malformed with GateFileInvalid.
void write_gate_file(const UnitaryGate& g, const std::string& path);
UnitaryGate load_gate_file(const std::string& path);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  long long count = 0;
};

// Entanglement statistics of a gate over Haar-random product inputs.
struct DistributionReport {
  std::string gate_label;
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  long long samples = 0;
  double log_base = 0.0;
  double mean = 0.0;
  double std_dev = 0.0;  // population standard deviation
  double min_value = 0.0;
  double max_value = 0.0;
  std::vector<HistogramBin> bins;  // partition of [0, log(min(m,n))]
};

// Sample k draws its input from StreamKey{seed, k}, so totals are
// independent of batching and reproducible per seed.
DistributionReport entanglement_distribution(const UnitaryGate& g,
                                             const BipartiteShape& shape,
                                             long long samples, int bins,
                                             double log_base, std::uint64_t seed);

// CSV with header "bin_lo,bin_hi,count", one row per bin.
void write_histogram_csv(const DistributionReport& rep, const std::string& path);

// One-line JSON with the summary statistics (no bins).
std::string summary_json(const DistributionReport& rep);

}  // namespace uent
