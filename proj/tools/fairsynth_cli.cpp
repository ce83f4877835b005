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

#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "fairsynth/harness.hpp"
#include "fairsynth/undersample.hpp"
#include "fairsynth/version.hpp"

namespace {

using namespace fairsynth;

struct CommonFlags {
  std::string config;
  std::string dataset;
  std::string schema;
  std::string synth;
  std::string eps_grid;
  std::optional<std::size_t> trials;
  std::string preprocess;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool test_mode_no_noise = false;
};

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) grid.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return grid;
}

// Config file first, CLI flags override.
RunSpec build_spec(const CommonFlags& flags) {
  RunSpec spec;
  if (!flags.config.empty()) spec = load_runspec(flags.config);
  if (!flags.dataset.empty()) spec.dataset_path = flags.dataset;
  if (!flags.schema.empty()) spec.schema_path = flags.schema;
  if (!flags.synth.empty()) spec.synthesizer = flags.synth;
  if (!flags.eps_grid.empty()) spec.eps_grid = parse_grid(flags.eps_grid);
  if (flags.trials) spec.trials = *flags.trials;
  if (!flags.preprocess.empty()) {
    if (flags.preprocess == "off") spec.preprocess = RunSpec::Preprocess::Off;
    else if (flags.preprocess == "on") spec.preprocess = RunSpec::Preprocess::On;
    else if (flags.preprocess == "both") spec.preprocess = RunSpec::Preprocess::Both;
    else throw Error("--preprocess must be off, on, or both");
  }
  if (flags.seed) spec.master_seed = *flags.seed;
  if (!flags.out.empty()) spec.out_dir = flags.out;
  spec.test_mode_no_noise = flags.test_mode_no_noise;
  return spec;
}

void add_common(CLI::App* cmd, CommonFlags* flags, bool with_matrix_knobs) {
  cmd->add_option("--config", flags->config, "JSON config file");
  cmd->add_option("--dataset", flags->dataset, "input table (delimited text)");
  cmd->add_option("--schema", flags->schema, "schema spec (JSON)");
  if (with_matrix_knobs) {
    cmd->add_option("--synth", flags->synth,
                    "synthesizer: mwem, mst, or quail-mwem");
    cmd->add_option("--eps-grid", flags->eps_grid,
                    "comma-separated epsilon grid, e.g. 1,2,4,8");
    cmd->add_option("--trials", flags->trials, "trials per epsilon");
    cmd->add_option("--preprocess", flags->preprocess,
                    "undersampling arm: off, on, or both");
  }
  cmd->add_option("--seed", flags->seed, "master seed");
  cmd->add_option("--out", flags->out, "output path");
#ifdef FAIRSYNTH_ENABLE_TEST_MODE
  cmd->add_flag("--test-mode-no-noise", flags->test_mode_no_noise,
                "disable all noise (test builds only)")
      ->group("");  // hidden
#endif
}

void print_ledger(const BudgetLedger& ledger) {
  std::cout << "ledger:\n";
  for (const LedgerEntry& e : ledger.entries()) {
    std::cout << "  " << e.label << ": eps=" << format_double(e.amount.epsilon)
              << " delta=" << format_double(e.amount.delta) << "\n";
  }
  const Budget spent = ledger.spent();
  std::cout << "  total: eps=" << format_double(spent.epsilon)
            << " delta=" << format_double(spent.delta) << "\n";
}

int cmd_synthesize(const CommonFlags& flags, double epsilon,
                   std::size_t rows) {
  RunSpec spec = build_spec(flags);
  if (spec.out_dir.empty()) throw Error("synthesize: --out is required");
  const SchemaSpec schema_spec = load_schema_spec(spec.schema_path);
  const Dataset data = load_table(spec.dataset_path, schema_spec);
  const double delta = spec.synthesizer == "mst" ? spec.mst.delta : 0.0;
  BudgetLedger ledger(Budget(epsilon, delta));
  Randomness rng(spec.master_seed);

  Dataset synthetic = [&] {
    if (spec.synthesizer == "mwem") {
      MwemOptions o = spec.mwem;
      o.disable_noise = spec.test_mode_no_noise;
      return mwem_synthesize(data, epsilon, o, ledger, rng, rows);
    }
    if (spec.synthesizer == "mst") {
      MstOptions o = spec.mst;
      o.disable_noise = spec.test_mode_no_noise;
      return mst_synthesize(data, epsilon, o, ledger, rng, rows);
    }
    if (spec.synthesizer == "quail-mwem") {
      QuailConfig c = spec.quail;
      c.disable_noise = spec.test_mode_no_noise;
      MwemOptions base_options = spec.mwem;
      base_options.disable_noise = spec.test_mode_no_noise;
      SynthFn base = [&base_options](const Dataset& d, double eps,
                                     BudgetLedger& l, Randomness& r) {
        return mwem_synthesize(d, eps, base_options, l, r);
      };
      return quail_synthesize(data, base, epsilon, c, ledger, rng);
    }
    throw Error("--synth must be mwem, mst, or quail-mwem");
  }();

  save_table(synthetic, schema_spec, spec.out_dir);
  std::cout << "wrote " << synthetic.row_count() << " synthetic rows to "
            << spec.out_dir << "\n";
  print_ledger(ledger);
  return 0;
}

int cmd_balance(const CommonFlags& flags) {
  RunSpec spec = build_spec(flags);
  const SchemaSpec schema_spec = load_schema_spec(spec.schema_path);
  const Dataset data = load_table(spec.dataset_path, schema_spec);
  const Dataset balanced = multilabel_undersample(data, spec.master_seed);
  const std::string target =
      spec.out_dir.empty() || spec.out_dir == "fairsynth-out"
          ? spec.dataset_path  // in place
          : spec.out_dir;
  save_table(balanced, schema_spec, target);
  std::cout << "balanced " << data.row_count() << " rows down to "
            << balanced.row_count() << " (minority proportion now "
            << format_double(minority_proportion(balanced)) << "), wrote "
            << target << "\n";
  return 0;
}

int cmd_evaluate(const CommonFlags& flags, const std::string& train_path,
                 const std::string& test_path, double lambda) {
  RunSpec spec = build_spec(flags);
  spec.downstream.lambda = lambda;
  const SchemaSpec schema_spec = load_schema_spec(spec.schema_path);
  const Dataset train = load_table(train_path, schema_spec);
  const Dataset test = load_table(test_path, schema_spec);
  const LogRegModel model = train_logreg(train, spec.downstream);
  const PredictionSet preds = predict(model, test);
  const GroupRates rates = group_rates(preds);
  const EodDistances eod = equalized_odds_distances(rates);
  std::cout << "f1=" << format_double(f1_score(preds))
            << " eod_tpr=" << format_double(eod.tpr_gap)
            << " eod_fpr=" << format_double(eod.fpr_gap)
            << " train_minority_prop="
            << format_double(minority_proportion(train)) << "\n";
  return 0;
}

int cmd_matrix(const CommonFlags& flags) {
  const RunSpec spec = build_spec(flags);
  const std::vector<RunResult> results = run_matrix_and_report(spec);
  std::size_t flagged = 0;
  for (const RunResult& r : results) flagged += r.metrics.flagged ? 1 : 0;
  std::cout << "completed " << results.size() << " runs (" << flagged
            << " flagged); reports in " << spec.out_dir << "\n";
  return 0;
}

int cmd_report(const std::string& in_dir, const std::string& out_dir) {
  namespace fs = std::filesystem;
  const auto records =
      read_metrics_csv((fs::path(in_dir) / "metrics.csv").string());
  const auto baselines =
      read_metrics_csv((fs::path(in_dir) / "baselines.csv").string());
  RunSpec spec;  // only out_dir matters for re-emission of the tables
  spec.out_dir = out_dir;

  fs::create_directories(out_dir);
  std::vector<MetricsRecord> with_baselines = records;
  with_baselines.insert(with_baselines.end(), baselines.begin(),
                        baselines.end());

  std::vector<RunResult> results;
  results.reserve(records.size());
  for (const MetricsRecord& r : records) {
    RunResult rr;
    rr.metrics = r;
    rr.cell = detail::concat(r.provenance.synthesizer, "_eps",
                             r.provenance.epsilon
                                 ? format_double(*r.provenance.epsilon)
                                 : std::string("np"),
                             "_trial", r.provenance.trial,
                             r.provenance.preprocessed ? "_pre" : "_raw");
    results.push_back(std::move(rr));
  }
  emit_reports(results, baselines, spec);
  std::cout << "re-emitted reports for " << records.size() << " runs into "
            << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairsynth: differentially private synthetic tabular data "
               "with downstream fairness auditing"};
  app.set_version_flag("--version", fairsynth::kVersion);
  app.require_subcommand(1);

  CommonFlags flags;

  auto* synthesize = app.add_subcommand(
      "synthesize", "generate one DP synthetic dataset");
  double epsilon = 1.0;
  std::size_t rows = 0;
  add_common(synthesize, &flags, true);
  synthesize->add_option("--eps", epsilon, "privacy budget epsilon");
  synthesize->add_option("--rows", rows, "synthetic rows (default: input size)");

  auto* balance = app.add_subcommand(
      "balance", "multi-label undersampling of a table");
  add_common(balance, &flags, false);

  auto* evaluate = app.add_subcommand(
      "evaluate", "train the downstream classifier and report metrics");
  std::string train_path, test_path;
  double lambda = 1.0;
  add_common(evaluate, &flags, false);
  evaluate->add_option("--train", train_path, "training table")->required();
  evaluate->add_option("--test", test_path, "held-out table")->required();
  evaluate->add_option("--lambda", lambda, "L2 regularization strength");

  auto* matrix = app.add_subcommand(
      "matrix", "run the {epsilon x trial x preprocessing} experiment matrix");
  add_common(matrix, &flags, true);

  auto* report = app.add_subcommand(
      "report", "re-emit aggregate tables from persisted metrics");
  std::string in_dir, report_out;
  report->add_option("--in", in_dir, "directory with metrics.csv")->required();
  report->add_option("--out", report_out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (synthesize->parsed()) return cmd_synthesize(flags, epsilon, rows);
    if (balance->parsed()) return cmd_balance(flags);
    if (evaluate->parsed()) {
      return cmd_evaluate(flags, train_path, test_path, lambda);
    }
    if (matrix->parsed()) return cmd_matrix(flags);
    if (report->parsed()) return cmd_report(in_dir, report_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
