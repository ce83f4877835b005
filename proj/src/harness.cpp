// Copyright 2026 The fairsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairsynth/harness.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fairsynth/undersample.hpp"
#include "fairsynth/version.hpp"

namespace fairsynth {

namespace fs = std::filesystem;

void RunSpec::validate() const {
  if (dataset_path.empty() || schema_path.empty()) {
    throw Error("run spec: dataset and schema paths are required");
  }
  if (synthesizer != "mwem" && synthesizer != "mst" &&
      synthesizer != "quail-mwem") {
    throw Error(detail::concat("run spec: unknown synthesizer '", synthesizer,
                               "' (expected mwem, mst, or quail-mwem)"));
  }
  if (eps_grid.empty()) throw Error("run spec: epsilon grid is empty");
  double prev = 0.0;
  for (double e : eps_grid) {
    if (!(e > 0.0)) throw Error("run spec: epsilon values must be positive");
    if (!(e > prev)) {
      throw Error("run spec: epsilon grid must strictly increase");
    }
    prev = e;
  }
  if (trials < 1) throw Error("run spec: trials must be >= 1");
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error("run spec: test_fraction must lie in (0, 1)");
  }
}

std::vector<bool> RunSpec::preprocessing_arms() const {
  switch (preprocess) {
    case Preprocess::Off:
      return {false};
    case Preprocess::On:
      return {true};
    case Preprocess::Both:
      return {false, true};
  }
  return {false};
}

std::uint64_t cell_seed(std::uint64_t master_seed, bool preprocessed,
                        std::size_t eps_index, std::size_t trial) {
  return mix_seed(master_seed, {preprocessed ? 1ull : 0ull,
                                static_cast<std::uint64_t>(eps_index),
                                static_cast<std::uint64_t>(trial)});
}

namespace {

RunSpec::Preprocess parse_preprocess(const std::string& text) {
  if (text == "off") return RunSpec::Preprocess::Off;
  if (text == "on") return RunSpec::Preprocess::On;
  if (text == "both") return RunSpec::Preprocess::Both;
  throw Error(detail::concat("run spec: preprocess must be off/on/both, got '",
                             text, "'"));
}

std::string preprocess_name(RunSpec::Preprocess p) {
  switch (p) {
    case RunSpec::Preprocess::Off:
      return "off";
    case RunSpec::Preprocess::On:
      return "on";
    case RunSpec::Preprocess::Both:
      return "both";
  }
  return "both";
}

}  // namespace

RunSpec parse_runspec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(detail::concat("run spec: invalid JSON: ", e.what()));
  }
  RunSpec spec;
  auto get = [&](const char* key, auto& out) {
    if (doc.contains(key)) out = doc[key].get<std::decay_t<decltype(out)>>();
  };
  get("dataset", spec.dataset_path);
  get("schema", spec.schema_path);
  get("synthesizer", spec.synthesizer);
  get("trials", spec.trials);
  get("seed", spec.master_seed);
  get("out", spec.out_dir);
  get("test_fraction", spec.test_fraction);
  get("persist_synthetic", spec.persist_synthetic);
  if (doc.contains("eps_grid")) {
    spec.eps_grid = doc["eps_grid"].get<std::vector<double>>();
  }
  if (doc.contains("preprocess")) {
    spec.preprocess = parse_preprocess(doc["preprocess"].get<std::string>());
  }
  if (doc.contains("mwem")) {
    const auto& m = doc["mwem"];
    if (m.contains("iterations")) spec.mwem.iterations = m["iterations"];
    if (m.contains("workload_max_way")) {
      spec.mwem.workload_max_way = m["workload_max_way"];
    }
    if (m.contains("workload_cap")) spec.mwem.workload_cap = m["workload_cap"];
  }
  if (doc.contains("mst")) {
    const auto& m = doc["mst"];
    if (m.contains("delta")) spec.mst.delta = m["delta"];
    if (m.contains("node_fraction")) spec.mst.node_fraction = m["node_fraction"];
    if (m.contains("select_fraction")) {
      spec.mst.select_fraction = m["select_fraction"];
    }
    if (m.contains("edge_fraction")) spec.mst.edge_fraction = m["edge_fraction"];
  }
  if (doc.contains("quail")) {
    const auto& q = doc["quail"];
    if (q.contains("synth_fraction")) spec.quail.synth_fraction = q["synth_fraction"];
    if (q.contains("lambda")) spec.quail.lambda = q["lambda"];
  }
  if (doc.contains("downstream")) {
    const auto& d = doc["downstream"];
    if (d.contains("lambda")) spec.downstream.lambda = d["lambda"];
    if (d.contains("max_iters")) spec.downstream.max_iters = d["max_iters"];
    if (d.contains("tolerance")) spec.downstream.tolerance = d["tolerance"];
    if (d.contains("include_protected")) {
      spec.downstream.encoder.include_protected = d["include_protected"];
    }
  }
  return spec;
}

RunSpec load_runspec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(detail::concat("cannot open '", path, "'"));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_runspec(buf.str());
}

namespace {

// Single cell of the matrix: seed, undersample, synthesize, train, audit.
struct CellPlan {
  bool preprocessed = false;
  std::size_t eps_index = 0;
  std::size_t trial = 0;
  double epsilon = 0.0;
};

std::string cell_name(const RunSpec& spec, const CellPlan& plan) {
  std::ostringstream out;
  out << spec.synthesizer << "_eps" << format_double(plan.epsilon) << "_trial";
  if (plan.trial < 10) out << '0';
  out << plan.trial << (plan.preprocessed ? "_pre" : "_raw");
  return out.str();
}

std::map<std::string, std::string> hyperparameters_of(const RunSpec& spec) {
  std::map<std::string, std::string> h;
  h["test_fraction"] = format_double(spec.test_fraction);
  h["downstream.lambda"] = format_double(spec.downstream.lambda);
  h["downstream.max_iters"] = std::to_string(spec.downstream.max_iters);
  h["downstream.tolerance"] = format_double(spec.downstream.tolerance);
  h["downstream.include_protected"] =
      spec.downstream.encoder.include_protected ? "true" : "false";
  h["synthetic_rows"] = "training-size";
  if (spec.synthesizer == "mwem" || spec.synthesizer == "quail-mwem") {
    h["mwem.iterations"] = std::to_string(spec.mwem.iterations);
    h["mwem.workload_max_way"] = std::to_string(spec.mwem.workload_max_way);
    h["mwem.workload_cap"] = std::to_string(spec.mwem.workload_cap);
  }
  if (spec.synthesizer == "mst") {
    h["mst.delta"] = format_double(spec.mst.delta);
    h["mst.node_fraction"] = format_double(spec.mst.node_fraction);
    h["mst.select_fraction"] = format_double(spec.mst.select_fraction);
    h["mst.edge_fraction"] = format_double(spec.mst.edge_fraction);
  }
  if (spec.synthesizer == "quail-mwem") {
    h["quail.synth_fraction"] = format_double(spec.quail.synth_fraction);
    h["quail.lambda"] = format_double(spec.quail.lambda);
  }
  return h;
}

Dataset dispatch_synthesizer(const RunSpec& spec, const Dataset& training,
                             double epsilon, BudgetLedger& ledger,
                             Randomness& rng) {
  if (spec.synthesizer == "mwem") {
    MwemOptions options = spec.mwem;
    options.disable_noise = spec.test_mode_no_noise;
    return mwem_synthesize(training, epsilon, options, ledger, rng);
  }
  if (spec.synthesizer == "mst") {
    MstOptions options = spec.mst;
    options.disable_noise = spec.test_mode_no_noise;
    return mst_synthesize(training, epsilon, options, ledger, rng);
  }
  if (spec.synthesizer == "quail-mwem") {
    QuailConfig config = spec.quail;
    config.disable_noise = spec.test_mode_no_noise;
    MwemOptions base_options = spec.mwem;
    base_options.disable_noise = spec.test_mode_no_noise;
    SynthFn base = [&base_options](const Dataset& d, double eps,
                                   BudgetLedger& l, Randomness& r) {
      return mwem_synthesize(d, eps, base_options, l, r);
    };
    return quail_synthesize(training, base, epsilon, config, ledger, rng);
  }
  throw Error("run spec: unknown synthesizer");
}

RunResult run_cell(const RunSpec& spec, const SchemaSpec& schema_spec,
                   const Dataset& train, const Dataset& test,
                   const CellPlan& plan) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult result;
  result.cell = cell_name(spec, plan);

  const std::uint64_t seed =
      cell_seed(spec.master_seed, plan.preprocessed, plan.eps_index,
                plan.trial);
  Randomness rng(seed);

  MetricsRecord& record = result.metrics;
  record.provenance.synthesizer = spec.synthesizer;
  record.provenance.epsilon = plan.epsilon;
  record.provenance.delta = spec.synthesizer == "mst" ? spec.mst.delta : 0.0;
  record.provenance.trial_seed = seed;
  record.provenance.trial = plan.trial;
  record.provenance.preprocessed = plan.preprocessed;
  record.provenance.hyperparameters = hyperparameters_of(spec);

  BudgetLedger ledger(Budget(plan.epsilon, record.provenance.delta));
  try {
    const Dataset training =
        plan.preprocessed
            ? multilabel_undersample(train, mix_seed(seed, {0xba1ull}))
            : train;
    if (training.lineage_contains("test-split") ||
        !test.lineage_contains("test-split")) {
      throw Error("harness: train/test lineage corrupted");
    }
    const Dataset synthetic =
        dispatch_synthesizer(spec, training, plan.epsilon, ledger, rng);
    record.minority_prop = minority_proportion(synthetic);

    if (spec.persist_synthetic) {
      const fs::path dir = fs::path(spec.out_dir) / "cells" / result.cell;
      fs::create_directories(dir);
      const std::string path = (dir / "synthetic.csv").string();
      save_table(synthetic, schema_spec, path);
      result.synthetic_path = path;
    }

    const LogRegModel model = train_logreg(synthetic, spec.downstream);
    const PredictionSet preds = predict(model, test);
    const GroupRates rates = group_rates(preds);
    record.f1 = f1_score(preds);
    const EodDistances eod = equalized_odds_distances(rates);
    record.eod_tpr = eod.tpr_gap;
    record.eod_fpr = eod.fpr_gap;
  } catch (const OverspendError&) {
    throw;  // accounting bug: abort the whole matrix
  } catch (const Error& e) {
    record.flagged = true;
    record.flag_reason = e.what();
  }

  result.ledger = ledger.entries();
  result.ledger_total = ledger.spent();
  result.duration_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

}  // namespace

std::vector<RunResult> run_matrix(const RunSpec& spec) {
  spec.validate();
  const SchemaSpec schema_spec = load_schema_spec(spec.schema_path);
  const Dataset data = load_table(spec.dataset_path, schema_spec);
  const SplitPair split =
      split_train_test(data, spec.test_fraction, spec.master_seed);

  std::vector<CellPlan> plans;
  for (bool arm : spec.preprocessing_arms()) {
    for (std::size_t e = 0; e < spec.eps_grid.size(); ++e) {
      for (std::size_t t = 0; t < spec.trials; ++t) {
        plans.push_back(CellPlan{arm, e, t, spec.eps_grid[e]});
      }
    }
  }

  std::vector<RunResult> results(plans.size());
  std::string abort_message;
  bool abort = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(plans.size()); ++i) {
    if (abort) continue;
    try {
      results[static_cast<std::size_t>(i)] =
          run_cell(spec, schema_spec, split.train, split.test,
                   plans[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        abort = true;
        abort_message = e.what();
      }
    }
  }
  if (abort) throw OverspendError(abort_message);
  return results;
}

std::vector<MetricsRecord> run_baselines(const RunSpec& spec) {
  spec.validate();
  const SchemaSpec schema_spec = load_schema_spec(spec.schema_path);
  const Dataset data = load_table(spec.dataset_path, schema_spec);
  const SplitPair split =
      split_train_test(data, spec.test_fraction, spec.master_seed);

  std::vector<MetricsRecord> records;
  for (bool arm : spec.preprocessing_arms()) {
    MetricsRecord record;
    record.provenance.synthesizer = "baseline";
    record.provenance.epsilon = std::nullopt;  // non-private
    record.provenance.delta = 0.0;
    record.provenance.preprocessed = arm;
    record.provenance.trial_seed =
        mix_seed(spec.master_seed, {0xba5eull, arm ? 1ull : 0ull});
    record.provenance.hyperparameters = hyperparameters_of(spec);
    try {
      const Dataset training =
          arm ? multilabel_undersample(split.train,
                                       record.provenance.trial_seed)
              : split.train;
      record.minority_prop = minority_proportion(training);
      const LogRegModel model = train_logreg(training, spec.downstream);
      const PredictionSet preds = predict(model, split.test);
      const GroupRates rates = group_rates(preds);
      record.f1 = f1_score(preds);
      const EodDistances eod = equalized_odds_distances(rates);
      record.eod_tpr = eod.tpr_gap;
      record.eod_fpr = eod.fpr_gap;
    } catch (const Error& e) {
      record.flagged = true;
      record.flag_reason = e.what();
    }
    records.push_back(std::move(record));
  }
  return records;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

constexpr const char* kMetricsHeader =
    "synthesizer,epsilon,delta,trial,seed,preprocessed,eod_tpr,eod_fpr,f1,"
    "minority_prop,flagged,flag_reason";

void append_metrics_row(std::ostringstream& out, const MetricsRecord& r) {
  out << r.provenance.synthesizer << ','
      << (r.provenance.epsilon ? format_double(*r.provenance.epsilon)
                               : std::string("non-private"))
      << ',' << format_double(r.provenance.delta) << ',' << r.provenance.trial
      << ',' << r.provenance.trial_seed << ','
      << (r.provenance.preprocessed ? "on" : "off") << ','
      << format_double(r.eod_tpr) << ',' << format_double(r.eod_fpr) << ','
      << format_double(r.f1) << ',' << format_double(r.minority_prop) << ','
      << (r.flagged ? 1 : 0) << ',' << csv_escape(r.flag_reason) << '\n';
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(detail::concat("cannot write '", path.string(), "'"));
  out << content;
}

std::string format_ledger_csv(const std::vector<LedgerEntry>& entries) {
  std::ostringstream out;
  out << "label,epsilon,delta\n";
  for (const LedgerEntry& e : entries) {
    out << csv_escape(e.label) << ',' << format_double(e.amount.epsilon) << ','
        << format_double(e.amount.delta) << '\n';
  }
  return out.str();
}

std::string format_summary_table(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "group,metric,count,flagged,mean,min,q1,median,q3,max\n";
  for (const SummaryRow& r : rows) {
    out << csv_escape(r.group) << ',' << r.metric << ',' << r.stats.count
        << ',' << r.flagged << ',' << format_double(r.stats.mean) << ','
        << format_double(r.stats.min) << ',' << format_double(r.stats.q1)
        << ',' << format_double(r.stats.median) << ','
        << format_double(r.stats.q3) << ',' << format_double(r.stats.max)
        << '\n';
  }
  return out.str();
}

nlohmann::json stats_json(const SummaryStats& s) {
  return {{"count", s.count}, {"mean", s.mean}, {"min", s.min},
          {"q1", s.q1},       {"median", s.median}, {"q3", s.q3},
          {"max", s.max}};
}

nlohmann::json record_json(const MetricsRecord& r) {
  nlohmann::json j;
  j["synthesizer"] = r.provenance.synthesizer;
  if (r.provenance.epsilon) j["epsilon"] = *r.provenance.epsilon;
  else j["epsilon"] = "non-private";
  j["delta"] = r.provenance.delta;
  j["trial"] = r.provenance.trial;
  j["seed"] = r.provenance.trial_seed;
  j["preprocessed"] = r.provenance.preprocessed;
  j["eod_tpr"] = r.eod_tpr;
  j["eod_fpr"] = r.eod_fpr;
  j["f1"] = r.f1;
  j["minority_prop"] = r.minority_prop;
  j["flagged"] = r.flagged;
  if (r.flagged) j["flag_reason"] = r.flag_reason;
  return j;
}

}  // namespace

std::string format_metrics_csv(const std::vector<MetricsRecord>& records) {
  std::ostringstream out;
  out << kMetricsHeader << '\n';
  for (const MetricsRecord& r : records) append_metrics_row(out, r);
  return out.str();
}

void emit_reports(const std::vector<RunResult>& results,
                  const std::vector<MetricsRecord>& baselines,
                  const RunSpec& spec) {
  if (results.empty()) throw Error("emit_reports: no results");
  const fs::path out_dir(spec.out_dir);
  fs::create_directories(out_dir);

  std::vector<MetricsRecord> records;
  records.reserve(results.size());
  for (const RunResult& r : results) records.push_back(r.metrics);

  write_file(out_dir / "metrics.csv", format_metrics_csv(records));
  write_file(out_dir / "baselines.csv", format_metrics_csv(baselines));

  // Per-cell ledger transcripts.
  for (const RunResult& r : results) {
    const fs::path dir = out_dir / "cells" / r.cell;
    fs::create_directories(dir);
    write_file(dir / "ledger.csv", format_ledger_csv(r.ledger));
  }

  // Minority-proportion distribution per synthesizer x preprocessing arm.
  std::vector<SummaryRow> box =
      aggregate(records, {"synthesizer", "preprocessed"});
  std::erase_if(box, [](const SummaryRow& r) {
    return r.metric != "minority_prop" && r.metric != "none";
  });
  write_file(out_dir / "minority_boxplot.csv", format_summary_table(box));

  // Mean fairness/accuracy per arm, with the non-private reference rows.
  std::vector<MetricsRecord> with_baselines = records;
  with_baselines.insert(with_baselines.end(), baselines.begin(),
                        baselines.end());
  std::vector<SummaryRow> fair =
      aggregate(with_baselines, {"synthesizer", "preprocessed"});
  std::erase_if(fair, [](const SummaryRow& r) {
    return r.metric != "abs_eod_tpr" && r.metric != "abs_eod_fpr" &&
           r.metric != "f1" && r.metric != "none";
  });
  write_file(out_dir / "fairness_summary.csv", format_summary_table(fair));

  // Machine-readable summary.
  nlohmann::json summary;
  summary["runs"] = nlohmann::json::array();
  for (const RunResult& r : results) {
    nlohmann::json j = record_json(r.metrics);
    j["cell"] = r.cell;
    j["ledger_epsilon"] = r.ledger_total.epsilon;
    j["ledger_delta"] = r.ledger_total.delta;
    if (!r.synthetic_path.empty()) j["synthetic_path"] = r.synthetic_path;
    summary["runs"].push_back(std::move(j));
  }
  summary["baselines"] = nlohmann::json::array();
  for (const MetricsRecord& r : baselines) {
    summary["baselines"].push_back(record_json(r));
  }
  summary["aggregates"] = nlohmann::json::array();
  for (const SummaryRow& row :
       aggregate(with_baselines, {"synthesizer", "preprocessed"})) {
    nlohmann::json j;
    j["group"] = row.group;
    j["metric"] = row.metric;
    j["flagged"] = row.flagged;
    j["stats"] = stats_json(row.stats);
    summary["aggregates"].push_back(std::move(j));
  }
  write_file(out_dir / "summary.json", summary.dump(2) + "\n");

  // Manifest: everything the run depended on, defaults included.
  nlohmann::json manifest;
  manifest["tool"] = "fairsynth";
  manifest["version"] = kVersion;
  manifest["dataset"] = spec.dataset_path;
  manifest["schema"] = spec.schema_path;
  manifest["synthesizer"] = spec.synthesizer;
  manifest["eps_grid"] = spec.eps_grid;
  manifest["trials"] = spec.trials;
  manifest["preprocess"] = preprocess_name(spec.preprocess);
  manifest["master_seed"] = spec.master_seed;
  manifest["test_mode_no_noise"] = spec.test_mode_no_noise;
  manifest["persist_synthetic"] = spec.persist_synthetic;
  manifest["hyperparameters"] = hyperparameters_of(spec);
  manifest["notes"] = {
      {"composition", "sequential (epsilons and deltas add)"},
      {"gaussian_calibration",
       "sigma = sensitivity * sqrt(2 ln(1.25/delta)) / epsilon"},
      {"mst_model",
       "tree-structured pairwise model (exact inference); general "
       "graphical-model selection is intentionally out of scope"},
      {"mst_delta_default", "1e-5; split evenly over the two Gaussian phases"},
      {"neighboring_datasets", "replace-one convention throughout"},
      {"quartiles", "median-exclusive halves"},
      {"seed_derivation",
       "cell seed = splitmix64 chain over (master, arm, eps_index, trial)"},
      {"schema_binning", "continuous columns discretized at ingestion"},
  };
  write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");

  // Wall-clock timings are useful but not byte-stable; they live in their
  // own file so everything above can be compared across reruns.
  std::ostringstream timings;
  timings << "cell,duration_ms\n";
  for (const RunResult& r : results) {
    timings << r.cell << ',' << format_double(r.duration_ms) << '\n';
  }
  write_file(out_dir / "timings.csv", timings.str());
}

std::vector<RunResult> run_matrix_and_report(const RunSpec& spec) {
  std::vector<RunResult> results = run_matrix(spec);
  const std::vector<MetricsRecord> baselines = run_baselines(spec);
  emit_reports(results, baselines, spec);
  return results;
}

namespace {

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::vector<MetricsRecord> read_metrics_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(detail::concat("cannot open '", path, "'"));
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(detail::concat(path, ": empty metrics file"));
  }
  std::vector<MetricsRecord> records;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto f = parse_csv_line(line);
    if (f.size() != 12) {
      throw Error(detail::concat(path, ": malformed metrics row"));
    }
    MetricsRecord r;
    r.provenance.synthesizer = f[0];
    if (f[1] != "non-private") r.provenance.epsilon = std::stod(f[1]);
    r.provenance.delta = std::stod(f[2]);
    r.provenance.trial = static_cast<std::size_t>(std::stoull(f[3]));
    r.provenance.trial_seed = std::stoull(f[4]);
    r.provenance.preprocessed = f[5] == "on";
    r.eod_tpr = std::stod(f[6]);
    r.eod_fpr = std::stod(f[7]);
    r.f1 = std::stod(f[8]);
    r.minority_prop = std::stod(f[9]);
    r.flagged = f[10] == "1";
    r.flag_reason = f[11];
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace fairsynth
