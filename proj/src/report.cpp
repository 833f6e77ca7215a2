#include "uent/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "uent/sampling.hpp"
#include "uent/separability.hpp"
#include "uent/version.hpp"

namespace uent {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Tiny append-only JSON object writer with a fixed field order.
class JsonWriter {
 public:
  void str(const std::string& key, const std::string& v) {
    field(key);
    out_ += '"';
    out_ += json_escape(v);
    out_ += '"';
  }
  void num(const std::string& key, double v) {
    field(key);
    out_ += fmt_double(v);
  }
  void integer(const std::string& key, long long v) {
    field(key);
    out_ += std::to_string(v);
  }
  void unsigned_integer(const std::string& key, std::uint64_t v) {
    field(key);
    out_ += std::to_string(v);
  }
  void vec(const std::string& key, const std::vector<double>& v) {
    field(key);
    out_ += '[';
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out_ += ',';
      out_ += fmt_double(v[i]);
    }
    out_ += ']';
  }
  std::string finish() { return "{" + out_ + "}"; }

 private:
  void field(const std::string& key) {
    if (!out_.empty()) out_ += ',';
    out_ += '"';
    out_ += json_escape(key);
    out_ += "\":";
  }
  std::string out_;
};

void split_state(const ProductState& s, RunRecord& r) {
  r.has_state = true;
  for (const Complex& z : s.factor_a.amplitudes()) {
    r.a_re.push_back(z.real());
    r.a_im.push_back(z.imag());
  }
  for (const Complex& z : s.factor_b.amplitudes()) {
    r.b_re.push_back(z.real());
    r.b_im.push_back(z.imag());
  }
}

RunRecord base_record(const UnitaryGate& g, const BipartiteShape& shape,
                      const DeConfig& cfg) {
  RunRecord r;
  r.gate_label = g.label;
  r.m = shape.m;
  r.n = shape.n;
  r.seed = cfg.seed;
  r.restarts = cfg.restarts;
  r.sqrt_branch = g.provenance.sqrt_branch;
  r.log_base = std::numbers::e;
  r.rng_algorithm = kRngAlgorithm;
  r.tool_version = kVersion;
  r.timestamp = now_rfc3339();
  return r;
}

}  // namespace

std::string now_rfc3339() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string to_json_line(const RunRecord& r) {
  JsonWriter w;
  w.str("kind", r.kind);
  w.str("gate_label", r.gate_label);
  w.integer("m", r.m);
  w.integer("n", r.n);
  w.unsigned_integer("seed", r.seed);
  w.integer("restarts", r.restarts);
  if (r.restart_index >= 0) w.integer("restart_index", r.restart_index);
  w.integer("evals_used", r.evals_used);
  if (!r.verdict.empty()) w.str("verdict", r.verdict);
  w.num("best_residual", r.best_residual);
  w.num("best_entanglement", r.best_entanglement);
  if (r.rejected_column >= 0) w.integer("rejected_column", r.rejected_column);
  if (r.has_state) {
    w.vec("a_re", r.a_re);
    w.vec("a_im", r.a_im);
    w.vec("b_re", r.b_re);
    w.vec("b_im", r.b_im);
  }
  w.str("sqrt_branch", r.sqrt_branch);
  w.num("log_base", r.log_base);
  w.str("rng", r.rng_algorithm);
  w.str("version", r.tool_version);
  w.str("timestamp", r.timestamp);
  return w.finish();
}

RunRecord run_record_from_json(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("run record is not valid JSON: ") + e.what());
  }
  try {
    RunRecord r;
    r.kind = j.value("kind", "");
    r.gate_label = j.value("gate_label", "");
    r.m = j.value("m", 0);
    r.n = j.value("n", 0);
    r.seed = j.value("seed", std::uint64_t{0});
    r.restarts = j.value("restarts", 0);
    r.restart_index = j.value("restart_index", -1);
    r.evals_used = j.value("evals_used", 0LL);
    r.verdict = j.value("verdict", "");
    r.best_residual = j.value("best_residual", 0.0);
    r.best_entanglement = j.value("best_entanglement", 0.0);
    r.rejected_column = j.value("rejected_column", -1);
    if (j.contains("a_re")) {
      r.has_state = true;
      r.a_re = j.at("a_re").get<std::vector<double>>();
      r.a_im = j.at("a_im").get<std::vector<double>>();
      r.b_re = j.at("b_re").get<std::vector<double>>();
      r.b_im = j.at("b_im").get<std::vector<double>>();
    }
    r.sqrt_branch = j.value("sqrt_branch", "");
    r.log_base = j.value("log_base", 0.0);
    r.rng_algorithm = j.value("rng", "");
    r.tool_version = j.value("version", "");
    r.timestamp = j.value("timestamp", "");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("run record has a malformed field: ") + e.what());
  }
}

void append_records(const std::string& path, const std::vector<RunRecord>& records) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open '" + path + "' for appending");
  for (const RunRecord& r : records) out << to_json_line(r) << '\n';
  if (!out) throw Error("write to '" + path + "' failed");
}

std::vector<RunRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::vector<RunRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(run_record_from_json(line));
  }
  return out;
}

RunRecord make_restart_record(const UnitaryGate& g, const BipartiteShape& shape,
                              const DeConfig& cfg, const RestartOutcome& outcome) {
  RunRecord r = base_record(g, shape, cfg);
  r.kind = "restart";
  r.restart_index = outcome.restart_index;
  r.evals_used = outcome.evals_used;
  r.best_residual = outcome.best_residual;
  r.best_entanglement = outcome.best_entanglement;
  split_state(outcome.best_input, r);
  return r;
}

RunRecord make_verdict_record(const UnitaryGate& g, const BipartiteShape& shape,
                              const DeConfig& cfg, const Verdict& verdict) {
  RunRecord r = base_record(g, shape, cfg);
  r.kind = "verdict";
  if (const auto* found = std::get_if<CounterexampleFound>(&verdict)) {
    r.verdict = "counterexample_found";
    r.evals_used = found->evals_used;
    r.best_residual = found->residual;
    r.best_entanglement = found->entanglement;
    split_state(found->input, r);
  } else if (const auto* surv = std::get_if<SurvivedBudget>(&verdict)) {
    r.verdict = "survived_budget";
    r.evals_used = surv->evals_used;
    r.best_residual = surv->best_residual;
    r.best_entanglement = surv->best_entanglement;
    split_state(surv->best_input, r);
  } else {
    const auto& rej = std::get<RejectedByColumnFilter>(verdict);
    r.verdict = "rejected_by_column_filter";
    r.rejected_column = rej.column;
    r.best_residual = rej.residual;
  }
  return r;
}

RunRecord make_min_ent_record(const UnitaryGate& g, const BipartiteShape& shape,
                              const DeConfig& cfg, const MinEntanglementResult& res,
                              double log_base) {
  RunRecord r = base_record(g, shape, cfg);
  r.kind = "min_entanglement";
  r.evals_used = res.evals_used;
  r.best_residual = res.best_residual;
  r.best_entanglement = res.best_entanglement;
  r.log_base = log_base;
  split_state(res.best_input, r);
  return r;
}

RestartOutcome outcome_from_record(const RunRecord& r) {
  if (r.kind != "restart" || !r.has_state)
    throw Error("record is not a restart checkpoint");
  if (r.a_re.size() != r.a_im.size() || r.b_re.size() != r.b_im.size())
    throw Error("restart record state arrays are inconsistent");
  std::vector<Complex> a, b;
  for (size_t i = 0; i < r.a_re.size(); ++i) a.emplace_back(r.a_re[i], r.a_im[i]);
  for (size_t i = 0; i < r.b_re.size(); ++i) b.emplace_back(r.b_re[i], r.b_im[i]);
  return RestartOutcome{r.restart_index,
                        0,  // per-restart seed is derivable from the master seed
                        r.evals_used,
                        r.best_residual,
                        r.best_entanglement,
                        ProductState{PureState(std::move(a)), PureState(std::move(b))}};
}

void write_gate_file(const UnitaryGate& g, const std::string& path) {
  if (!g.shape) throw ShapeUnknown("gate has no bipartite shape to record");
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << "{\"label\":\"" << json_escape(g.label) << "\",\"m\":" << g.shape->m
      << ",\"n\":" << g.shape->n << ",\"matrix\":[\n";
  const int d = g.dim();
  for (int i = 0; i < d; ++i) {
    out << " [";
    for (int j = 0; j < d; ++j) {
      const Complex z = g.matrix(i, j);
      out << (j ? "," : "") << '[' << fmt_double(z.real()) << ',' << fmt_double(z.imag())
          << ']';
    }
    out << (i + 1 < d ? "],\n" : "]\n");
  }
  out << "]}\n";
  if (!out) throw Error("write to '" + path + "' failed");
}

UnitaryGate load_gate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GateFileInvalid("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw GateFileInvalid(std::string("gate file is not valid JSON: ") + e.what());
  }

  std::string label;
  int m = 0, n = 0;
  try {
    label = j.at("label").get<std::string>();
    m = j.at("m").get<int>();
    n = j.at("n").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw GateFileInvalid(std::string("gate file header is malformed: ") + e.what());
  }
  if (m < 2 || n < 2) throw GateFileInvalid("gate file shape must have m, n >= 2");

  const int d = m * n;
  ComplexMatrix mat(d, d);
  try {
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
      throw GateFileInvalid("gate file matrix must have m*n rows");
    for (int i = 0; i < d; ++i) {
      const auto& row = rows.at(static_cast<size_t>(i));
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        throw GateFileInvalid("gate file matrix must have m*n columns per row");
      for (int jj = 0; jj < d; ++jj) {
        const auto& cell = row.at(static_cast<size_t>(jj));
        if (!cell.is_array() || cell.size() != 2)
          throw GateFileInvalid("gate file entries must be [re, im] pairs");
        mat(i, jj) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw GateFileInvalid(std::string("gate file matrix is malformed: ") + e.what());
  }
  mat.check_finite();
  if (!is_unitary(mat, tol::TOL_UNITARY))
    throw NotUnitary("gate file matrix is not unitary");

  return UnitaryGate{label, std::move(mat), BipartiteShape(m, n),
                     {"file:" + path, "", "file"}};
}

DistributionReport entanglement_distribution(const UnitaryGate& g,
                                             const BipartiteShape& shape,
                                             long long samples, int bins,
                                             double log_base, std::uint64_t seed) {
  if (g.dim() != shape.dim())
    throw ShapeMismatch("gate dimension does not match bipartite shape");
  if (samples < 1) throw ShapeMismatch("sample count must be positive");
  if (bins < 1) throw ShapeMismatch("bin count must be positive");
  if (log_base <= 0.0 || log_base == 1.0)
    throw ShapeMismatch("log base must be positive and different from 1");

  const double top =
      std::log(static_cast<double>(std::min(shape.m, shape.n))) / std::log(log_base);
  DistributionReport rep;
  rep.gate_label = g.label;
  rep.m = shape.m;
  rep.n = shape.n;
  rep.seed = seed;
  rep.samples = samples;
  rep.log_base = log_base;
  rep.bins.resize(static_cast<size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    rep.bins[static_cast<size_t>(b)].lo = top * b / bins;
    rep.bins[static_cast<size_t>(b)].hi = top * (b + 1) / bins;
  }

  double sum = 0.0, sum2 = 0.0;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (long long k = 0; k < samples; ++k) {
    const ProductState in = random_product_state(shape, StreamKey{seed, static_cast<std::uint64_t>(k)});
    const PureState out = apply_gate(g, in.flatten());
    const double h = entanglement_entropy(out, shape, log_base);
    sum += h;
    sum2 += h * h;
    lo = std::min(lo, h);
    hi = std::max(hi, h);
    int idx = static_cast<int>(h / top * bins);
    if (idx < 0) idx = 0;
    if (idx >= bins) idx = bins - 1;  // h == top lands in the last bin
    ++rep.bins[static_cast<size_t>(idx)].count;
  }
  rep.mean = sum / static_cast<double>(samples);
  const double var = sum2 / static_cast<double>(samples) - rep.mean * rep.mean;
  rep.std_dev = var > 0.0 ? std::sqrt(var) : 0.0;
  rep.min_value = lo;
  rep.max_value = hi;
  return rep;
}

void write_histogram_csv(const DistributionReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << "bin_lo,bin_hi,count\n";
  for (const HistogramBin& b : rep.bins)
    out << fmt_double(b.lo) << ',' << fmt_double(b.hi) << ',' << b.count << '\n';
  if (!out) throw Error("write to '" + path + "' failed");
}

std::string summary_json(const DistributionReport& rep) {
  JsonWriter w;
  w.str("gate_label", rep.gate_label);
  w.integer("m", rep.m);
  w.integer("n", rep.n);
  w.unsigned_integer("seed", rep.seed);
  w.integer("samples", rep.samples);
  w.num("log_base", rep.log_base);
  w.num("mean", rep.mean);
  w.num("std_dev", rep.std_dev);
  w.num("min", rep.min_value);
  w.num("max", rep.max_value);
  w.str("rng", kRngAlgorithm);
  w.str("version", kVersion);
  return w.finish();
}

}  // namespace uent
