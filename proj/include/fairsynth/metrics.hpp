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

#ifndef FAIRSYNTH_METRICS_HPP_
#define FAIRSYNTH_METRICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairsynth/logreg.hpp"

namespace fairsynth {

struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
};

// Per-group confusion tallies. A rate with a zero denominator is flagged
// undefined rather than silently replaced; callers decide what to do.
struct GroupRates {
  ConfusionCounts by_group[2];

  bool tpr_defined(int a) const {
    return by_group[a].tp + by_group[a].fn > 0;
  }
  bool fpr_defined(int a) const {
    return by_group[a].fp + by_group[a].tn > 0;
  }
  bool all_defined() const {
    return tpr_defined(0) && tpr_defined(1) && fpr_defined(0) &&
           fpr_defined(1);
  }
  double tpr(int a) const;
  double fpr(int a) const;
};

GroupRates group_rates(const PredictionSet& preds);

// Signed equalized-odds distances: rate(group 1) - rate(group 0) for TPR and
// FPR. Positive values favor the group coded 1. Throws if any rate is
// undefined.
struct EodDistances {
  double tpr_gap = 0.0;
  double fpr_gap = 0.0;
};
EodDistances equalized_odds_distances(const GroupRates& rates);

// Pooled F1 = 2 TP / (2 TP + FP + FN); 0 by convention when the denominator
// vanishes (no positives predicted or present).
double f1_score(const PredictionSet& preds);

// Everything a single pipeline run reports, plus full provenance so the run
// can be reproduced from the record alone.
struct Provenance {
  std::string synthesizer;             // "mwem", "mst", "quail-mwem", "baseline"
  std::optional<double> epsilon;       // empty = non-private
  double delta = 0.0;
  std::uint64_t trial_seed = 0;
  std::size_t trial = 0;
  bool preprocessed = false;
  std::map<std::string, std::string> hyperparameters;
};

struct MetricsRecord {
  double eod_tpr = 0.0;
  double eod_fpr = 0.0;
  double f1 = 0.0;
  double minority_prop = 0.0;  // of the (synthetic) training data
  Provenance provenance;
  bool flagged = false;
  std::string flag_reason;
};

// Summary statistics used for the boxplot/bar tables. Quartiles use the
// median-exclusive rule: the halves on either side of the median (median
// dropped when n is odd), each summarized by its own median. Mean uses
// compensated summation.
struct SummaryStats {
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};
SummaryStats summarize(std::vector<double> values);

struct SummaryRow {
  std::string group;   // "key=value|key=value" in group_by order
  std::string metric;  // eod_tpr, eod_fpr, abs_eod_tpr, abs_eod_fpr, f1, ...
  SummaryStats stats;
  std::size_t flagged = 0;  // records excluded from the stats
};

// Groups records by the given provenance keys ("synthesizer", "epsilon",
// "preprocessed") and summarizes each metric per group. Flagged records are
// excluded from the statistics and reported in the flagged column.
std::vector<SummaryRow> aggregate(const std::vector<MetricsRecord>& records,
                                  const std::vector<std::string>& group_by);

}  // namespace fairsynth

#endif  // FAIRSYNTH_METRICS_HPP_
