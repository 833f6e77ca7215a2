// Command-line front end: gate checks, entanglement statistics, gate file
// emission and the known-state fixtures, with machine-readable JSON output.
//
// Exit codes: 0 success / gate survived, 10 counterexample found or column
// filter failed, 2 usage or input errors.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "uent/de.hpp"
#include "uent/decomp.hpp"
#include "uent/gates.hpp"
#include "uent/report.hpp"
#include "uent/separability.hpp"
#include "uent/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 10;  // counterexample / filter failure
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string gate;
  int m = 0;
  int n = 0;
};

struct SearchOpts {
  std::uint64_t seed = 1;
  long long budget = 1'000'000;
  int restarts = 8;
  int population = 40;
  double weight_f = 0.7;
  double crossover_cr = 0.9;
  double residual_tol = uent::tol::DEFAULT_RESIDUAL_TOL;
  double entropy_tol = uent::tol::DEFAULT_ENTROPY_TOL;
};

uent::DeConfig to_config(const SearchOpts& s) {
  uent::DeConfig cfg;
  cfg.population = s.population;
  cfg.weight_f = s.weight_f;
  cfg.crossover_cr = s.crossover_cr;
  cfg.max_evals = s.budget;
  cfg.restarts = s.restarts;
  cfg.seed = s.seed;
  cfg.residual_tol = s.residual_tol;
  cfg.entropy_tol = s.entropy_tol;
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--gate", opts.gate, "builtin gate name or gate file path")->required();
  cmd->add_option("--m", opts.m, "first factor dimension (overrides the gate default)");
  cmd->add_option("--n", opts.n, "second factor dimension (overrides the gate default)");
}

void add_search(CLI::App* cmd, SearchOpts& opts) {
  cmd->add_option("--seed", opts.seed, "master seed");
  cmd->add_option("--budget", opts.budget, "total objective evaluations across restarts");
  cmd->add_option("--restarts", opts.restarts, "independent DE restarts");
  cmd->add_option("--population", opts.population, "DE population size");
  cmd->add_option("--weight-f", opts.weight_f, "DE differential weight");
  cmd->add_option("--crossover-cr", opts.crossover_cr, "DE crossover probability");
  cmd->add_option("--residual-tol", opts.residual_tol,
                  "residual below which an output counts as separable");
  cmd->add_option("--entropy-tol", opts.entropy_tol,
                  "entropy below which a counterexample is confirmed");
}

uent::UnitaryGate resolve_gate(const std::string& ref) {
  try {
    return uent::builtin(ref);
  } catch (const uent::UnknownGate&) {
    if (std::filesystem::exists(ref)) return uent::load_gate_file(ref);
    std::string names;
    for (const std::string& n : uent::builtin_names()) {
      if (!names.empty()) names += ", ";
      names += n;
    }
    throw uent::UnknownGate("'" + ref + "' is neither a builtin gate (" + names +
                            ") nor an existing gate file");
  }
}

uent::BipartiteShape resolve_shape(const uent::UnitaryGate& g, const CommonOpts& opts) {
  if ((opts.m == 0) != (opts.n == 0))
    throw uent::ShapeMismatch("--m and --n must be given together");
  if (opts.m != 0) {
    uent::BipartiteShape shape(opts.m, opts.n);
    if (shape.dim() != g.dim())
      throw uent::ShapeMismatch("--m * --n does not match the gate dimension");
    return shape;
  }
  if (g.shape) return *g.shape;
  throw uent::ShapeUnknown("gate '" + g.label +
                           "' has no default bipartite shape; pass --m and --n");
}

double parse_log_base(const std::string& text) {
  if (text == "e" || text == "E") return std::numbers::e;
  double v = 0.0;
  try {
    size_t used = 0;
    v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw uent::ShapeMismatch("--log-base must be 'e' or a number");
  }
  if (v <= 0.0 || v == 1.0)
    throw uent::ShapeMismatch("log base must be positive and different from 1");
  return v;
}

void maybe_append(const std::string& path, const uent::RunRecord& rec) {
  if (!path.empty()) uent::append_records(path, {rec});
}

int cmd_check(const CommonOpts& common, const SearchOpts& search, const std::string& out,
              bool skip_filter, bool resume) {
  const uent::UnitaryGate g = resolve_gate(common.gate);
  const uent::BipartiteShape shape = resolve_shape(g, common);
  const uent::DeConfig cfg = to_config(search);
  cfg.validate();

  if (!skip_filter) {
    const uent::ColumnFilterReport filt = uent::column_separability_filter(g, shape);
    if (!filt.pass) {
      const uent::Verdict v = uent::RejectedByColumnFilter{filt.column, filt.residual};
      const uent::RunRecord rec = uent::make_verdict_record(g, shape, cfg, v);
      maybe_append(out, rec);
      std::cout << uent::to_json_line(rec) << '\n';
      return kExitNegative;
    }
  }

  // Per-restart checkpoints: with --resume, finished restarts are read back
  // from the record file instead of being recomputed.
  std::vector<uent::RestartOutcome> outcomes;
  std::vector<bool> have(static_cast<size_t>(cfg.restarts), false);
  if (resume && !out.empty() && std::filesystem::exists(out)) {
    for (const uent::RunRecord& rec : uent::load_records(out)) {
      if (rec.kind != "restart" || rec.gate_label != g.label || rec.m != shape.m ||
          rec.n != shape.n || rec.seed != cfg.seed || rec.restarts != cfg.restarts)
        continue;
      if (rec.restart_index < 0 || rec.restart_index >= cfg.restarts) continue;
      if (have[static_cast<size_t>(rec.restart_index)]) continue;
      outcomes.push_back(uent::outcome_from_record(rec));
      have[static_cast<size_t>(rec.restart_index)] = true;
    }
  }

  auto confirms = [&](const uent::RestartOutcome& o) {
    return o.best_residual < cfg.residual_tol && o.best_entanglement < cfg.entropy_tol;
  };
  for (int r = 0; r < cfg.restarts; ++r) {
    if (have[static_cast<size_t>(r)]) continue;
    // Stop launching new restarts once a lower-indexed one already confirms.
    bool done = false;
    for (const auto& o : outcomes)
      if (o.restart_index < r && confirms(o)) done = true;
    if (done) break;

    const uent::RestartOutcome o = uent::run_restart(g, shape, cfg, r);
    maybe_append(out, uent::make_restart_record(g, shape, cfg, o));
    outcomes.push_back(o);
    have[static_cast<size_t>(r)] = true;
  }

  const uent::Verdict v = uent::verdict_from_outcomes(cfg, std::move(outcomes));
  const uent::RunRecord rec = uent::make_verdict_record(g, shape, cfg, v);
  maybe_append(out, rec);
  std::cout << uent::to_json_line(rec) << '\n';
  return std::holds_alternative<uent::SurvivedBudget>(v) ? kExitOk : kExitNegative;
}

int cmd_min_ent(const CommonOpts& common, const SearchOpts& search,
                const std::string& log_base_text, const std::string& out,
                bool skip_filter) {
  const uent::UnitaryGate g = resolve_gate(common.gate);
  const uent::BipartiteShape shape = resolve_shape(g, common);
  const uent::DeConfig cfg = to_config(search);
  const double base = parse_log_base(log_base_text);

  if (!skip_filter) {
    const uent::ColumnFilterReport filt = uent::column_separability_filter(g, shape);
    if (!filt.pass) {
      const uent::Verdict v = uent::RejectedByColumnFilter{filt.column, filt.residual};
      const uent::RunRecord rec = uent::make_verdict_record(g, shape, cfg, v);
      maybe_append(out, rec);
      std::cout << uent::to_json_line(rec) << '\n';
      return kExitNegative;
    }
  }

  const uent::MinEntanglementResult res = uent::min_entanglement_search(g, shape, cfg, base);
  const uent::RunRecord rec = uent::make_min_ent_record(g, shape, cfg, res, base);
  maybe_append(out, rec);
  std::cout << uent::to_json_line(rec) << '\n';
  return kExitOk;
}

int cmd_distribution(const CommonOpts& common, long long samples, int bins,
                     const std::string& log_base_text, std::uint64_t seed,
                     const std::string& out) {
  const uent::UnitaryGate g = resolve_gate(common.gate);
  const uent::BipartiteShape shape = resolve_shape(g, common);
  const double base = parse_log_base(log_base_text);

  const uent::DistributionReport rep =
      uent::entanglement_distribution(g, shape, samples, bins, base, seed);
  uent::write_histogram_csv(rep, out);

  std::string summary_path = out;
  if (summary_path.size() > 4 && summary_path.substr(summary_path.size() - 4) == ".csv")
    summary_path.resize(summary_path.size() - 4);
  summary_path += ".summary.json";
  {
    std::ofstream sfile(summary_path);
    if (!sfile) throw uent::Error("cannot open '" + summary_path + "' for writing");
    sfile << uent::summary_json(rep) << '\n';
  }
  std::cout << uent::summary_json(rep) << '\n';
  return kExitOk;
}

int cmd_filter(const CommonOpts& common, double tol) {
  const uent::UnitaryGate g = resolve_gate(common.gate);
  const uent::BipartiteShape shape = resolve_shape(g, common);
  const uent::ColumnFilterReport rep = uent::column_separability_filter(g, shape, tol);
  std::printf(
      "{\"gate_label\":\"%s\",\"m\":%d,\"n\":%d,\"pass\":%s,\"column\":%d,"
      "\"residual\":%.17g,\"tol\":%.17g}\n",
      g.label.c_str(), shape.m, shape.n, rep.pass ? "true" : "false", rep.column,
      rep.residual, tol);
  return rep.pass ? kExitOk : kExitNegative;
}

int cmd_gate_emit(const std::string& name, const std::string& out) {
  const uent::UnitaryGate g = resolve_gate(name);
  uent::write_gate_file(g, out);
  std::cout << "{\"label\":\"" << g.label << "\",\"path\":\"" << out << "\"}\n";
  return kExitOk;
}

int cmd_kappa(const std::string& log_base_text) {
  const double base = parse_log_base(log_base_text);
  const uent::PureState k = uent::kappa_state();

  std::string body;
  const int splits[3][1] = {{0}, {1}, {2}};
  const char* names[3] = {"0|12", "1|02", "2|01"};
  for (int s = 0; s < 3; ++s) {
    uent::SplitMask mask{{3, 3, 3}, {splits[s][0]}};
    const uent::ResidualReport rep = uent::multipartite_split_residual(k, mask);
    const uent::ComplexMatrix mat = uent::split_coefficient_matrix(k, mask);
    const double h =
        uent::entropy_from_singular_values(uent::singular_values(mat), base);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s\"%s\":{\"residual\":%.17g,\"max_minor\":%.17g,"
                  "\"minor_count\":%d,\"entropy\":%.17g}",
                  s ? "," : "", names[s], rep.total, rep.max_minor, rep.minor_count, h);
    body += buf;
  }
  std::printf("{\"state\":\"kappa\",\"log_base\":%.17g,\"splits\":{%s}}\n", base, body.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal-entangler gate testing toolkit"};
  app.set_version_flag("--version", uent::kVersion);
  app.require_subcommand(1);

  // check
  CommonOpts chk_common;
  SearchOpts chk_search;
  std::string chk_out;
  bool chk_skip_filter = false, chk_resume = false;
  CLI::App* chk = app.add_subcommand(
      "check", "search for a product input with separable image (counterexample)");
  add_common(chk, chk_common);
  add_search(chk, chk_search);
  chk->add_option("--out", chk_out, "JSONL file for restart checkpoints and the verdict");
  chk->add_flag("--skip-filter", chk_skip_filter, "skip the column separability filter");
  chk->add_flag("--resume", chk_resume, "reuse finished restarts found in --out");

  // min-ent
  CommonOpts me_common;
  SearchOpts me_search;
  std::string me_out, me_log_base = "e";
  bool me_skip_filter = false;
  CLI::App* me = app.add_subcommand(
      "min-ent", "minimize output entanglement over product inputs");
  add_common(me, me_common);
  add_search(me, me_search);
  me->add_option("--log-base", me_log_base, "entropy log base ('e' or a number)");
  me->add_option("--out", me_out, "JSONL file for the result record");
  me->add_flag("--skip-filter", me_skip_filter, "skip the column separability filter");

  // distribution
  CommonOpts dist_common;
  long long dist_samples = 100'000;
  int dist_bins = 60;
  std::string dist_log_base = "e", dist_out = "distribution.csv";
  std::uint64_t dist_seed = 1;
  CLI::App* dist = app.add_subcommand(
      "distribution", "entanglement histogram over Haar-random product inputs");
  add_common(dist, dist_common);
  dist->add_option("--samples", dist_samples, "number of product inputs");
  dist->add_option("--bins", dist_bins, "histogram bin count");
  dist->add_option("--log-base", dist_log_base, "entropy log base ('e' or a number)");
  dist->add_option("--seed", dist_seed, "master seed");
  dist->add_option("--out", dist_out, "CSV output path (summary goes next to it)");

  // filter
  CommonOpts filt_common;
  double filt_tol = uent::tol::DEFAULT_SEPARABILITY_TOL;
  CLI::App* filt = app.add_subcommand(
      "filter", "column separability screen (necessary condition)");
  add_common(filt, filt_common);
  filt->add_option("--tol", filt_tol, "residual threshold for a separable column");

  // gate emit
  CLI::App* gate = app.add_subcommand("gate", "gate file utilities");
  gate->require_subcommand(1);
  std::string emit_name, emit_out;
  CLI::App* emit = gate->add_subcommand("emit", "write a gate to a JSON gate file");
  emit->add_option("--gate", emit_name, "builtin gate name or gate file path")->required();
  emit->add_option("--out", emit_out, "output path")->required();

  // kappa
  std::string kappa_log_base = "e";
  CLI::App* kap = app.add_subcommand(
      "kappa", "report the three bipartitions of the kappa fixture state");
  kap->add_option("--log-base", kappa_log_base, "entropy log base ('e' or a number)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*chk) return cmd_check(chk_common, chk_search, chk_out, chk_skip_filter, chk_resume);
    if (*me) return cmd_min_ent(me_common, me_search, me_log_base, me_out, me_skip_filter);
    if (*dist)
      return cmd_distribution(dist_common, dist_samples, dist_bins, dist_log_base,
                              dist_seed, dist_out);
    if (*filt) return cmd_filter(filt_common, filt_tol);
    if (*emit) return cmd_gate_emit(emit_name, emit_out);
    if (*kap) return cmd_kappa(kappa_log_base);
  } catch (const uent::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
