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

#ifndef FAIRSYNTH_HARNESS_HPP_
#define FAIRSYNTH_HARNESS_HPP_

#include <string>
#include <vector>

#include "fairsynth/budget.hpp"
#include "fairsynth/metrics.hpp"
#include "fairsynth/mst.hpp"
#include "fairsynth/mwem.hpp"
#include "fairsynth/quail.hpp"
#include "fairsynth/table_io.hpp"

namespace fairsynth {

// Everything one experiment matrix needs. Defaults follow the evaluated
// pipeline: epsilon grid 1..8, ten trials per budget, both preprocessing
// arms (8 x 10 x 2 = 160 runs per synthesizer).
struct RunSpec {
  std::string dataset_path;
  std::string schema_path;
  std::string synthesizer = "mwem";  // mwem | mst | quail-mwem
  std::vector<double> eps_grid = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0};
  std::size_t trials = 10;
  enum class Preprocess { Off, On, Both };
  Preprocess preprocess = Preprocess::Both;
  std::uint64_t master_seed = 0;
  std::string out_dir = "fairsynth-out";
  double test_fraction = 0.2;

  MwemOptions mwem;
  MstOptions mst;
  QuailConfig quail;
  LogRegOptions downstream;

  bool test_mode_no_noise = false;  // hidden; test builds only
  bool persist_synthetic = true;

  void validate() const;
  std::vector<bool> preprocessing_arms() const;  // false = off, true = on
};

RunSpec parse_runspec(const std::string& json_text);
RunSpec load_runspec(const std::string& path);

struct RunResult {
  std::string cell;  // e.g. "mwem_eps2_trial03_pre"
  MetricsRecord metrics;
  std::vector<LedgerEntry> ledger;
  Budget ledger_total;
  std::string synthetic_path;  // empty when persistence is off
  double duration_ms = 0.0;
};

// Runs the full {epsilon x trial x preprocessing} matrix off a single
// train/test split derived from the master seed. Cell failures (degenerate
// synthetic data, undefined rates) come back as flagged records; overspends
// abort. Cells may run in parallel; results and files are deterministic
// because every cell's seed is derived from its coordinates and outputs are
// merged in a fixed order.
std::vector<RunResult> run_matrix(const RunSpec& spec);

// Non-private reference metrics: the downstream classifier trained directly
// on the real training split (raw, and undersampled when the spec has a
// preprocessing arm). Epsilon is marked non-private in provenance.
std::vector<MetricsRecord> run_baselines(const RunSpec& spec);

// Writes metrics.csv, baselines.csv, minority_boxplot.csv,
// fairness_summary.csv, summary.json and manifest.json under spec.out_dir.
// Pure function of its inputs: re-emitting reproduces identical bytes.
void emit_reports(const std::vector<RunResult>& results,
                  const std::vector<MetricsRecord>& baselines,
                  const RunSpec& spec);

// run_matrix + run_baselines + emit_reports.
std::vector<RunResult> run_matrix_and_report(const RunSpec& spec);

// Re-emission support: parse persisted per-run tables back into records.
std::vector<MetricsRecord> read_metrics_csv(const std::string& path);
std::string format_metrics_csv(const std::vector<MetricsRecord>& records);

// Derivation of one cell's seed from the matrix coordinates.
std::uint64_t cell_seed(std::uint64_t master_seed, bool preprocessed,
                        std::size_t eps_index, std::size_t trial);

}  // namespace fairsynth

#endif  // FAIRSYNTH_HARNESS_HPP_
