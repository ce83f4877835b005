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

#include "fairsynth/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fairsynth/parallel.hpp"
#include "fairsynth/table_io.hpp"

namespace fairsynth {

double GroupRates::tpr(int a) const {
  if (!tpr_defined(a)) {
    throw Error(detail::concat("group ", a, ": TPR undefined (no Y=1 rows)"));
  }
  return static_cast<double>(by_group[a].tp) /
         static_cast<double>(by_group[a].tp + by_group[a].fn);
}

double GroupRates::fpr(int a) const {
  if (!fpr_defined(a)) {
    throw Error(detail::concat("group ", a, ": FPR undefined (no Y=0 rows)"));
  }
  return static_cast<double>(by_group[a].fp) /
         static_cast<double>(by_group[a].fp + by_group[a].tn);
}

GroupRates group_rates(const PredictionSet& preds) {
  if (preds.size() == 0) throw Error("group_rates: empty prediction set");
  GroupRates out;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    ConfusionCounts& c = out.by_group[preds.group[i]];
    if (preds.actual[i] == 1) {
      (preds.predicted[i] == 1 ? c.tp : c.fn) += 1;
    } else {
      (preds.predicted[i] == 1 ? c.fp : c.tn) += 1;
    }
  }
  return out;
}

EodDistances equalized_odds_distances(const GroupRates& rates) {
  if (!rates.all_defined()) {
    throw Error(
        "equalized_odds_distances: a per-group rate is undefined "
        "(some group lacks Y=1 or Y=0 rows)");
  }
  return EodDistances{rates.tpr(1) - rates.tpr(0),
                      rates.fpr(1) - rates.fpr(0)};
}

double f1_score(const PredictionSet& preds) {
  if (preds.size() == 0) throw Error("f1_score: empty prediction set");
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (preds.predicted[i] == 1 && preds.actual[i] == 1) ++tp;
    if (preds.predicted[i] == 1 && preds.actual[i] == 0) ++fp;
    if (preds.predicted[i] == 0 && preds.actual[i] == 1) ++fn;
  }
  const double denom = static_cast<double>(2 * tp + fp + fn);
  return denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(tp) / denom;
}

namespace {

double median_of(const std::vector<double>& sorted, std::size_t lo,
                 std::size_t hi) {  // half-open [lo, hi)
  const std::size_t n = hi - lo;
  const std::size_t mid = lo + n / 2;
  return n % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
}

}  // namespace

SummaryStats summarize(std::vector<double> values) {
  if (values.empty()) throw Error("summarize: no values");
  SummaryStats s;
  s.count = values.size();
  s.mean = par::kahan_sum(values.data(), values.size()) /
           static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  s.min = values.front();
  s.max = values.back();
  const std::size_t n = values.size();
  s.median = median_of(values, 0, n);
  if (n == 1) {
    s.q1 = s.q3 = values[0];
  } else {
    // Median-exclusive halves: lower is [0, n/2), upper starts past the
    // median element for odd n.
    s.q1 = median_of(values, 0, n / 2);
    s.q3 = median_of(values, n % 2 == 0 ? n / 2 : n / 2 + 1, n);
  }
  return s;
}

namespace {

std::string provenance_key_value(const MetricsRecord& r,
                                 const std::string& key) {
  if (key == "synthesizer") return r.provenance.synthesizer;
  if (key == "epsilon") {
    return r.provenance.epsilon ? format_double(*r.provenance.epsilon)
                                : std::string("non-private");
  }
  if (key == "preprocessed") return r.provenance.preprocessed ? "on" : "off";
  if (key == "trial") return std::to_string(r.provenance.trial);
  throw Error(detail::concat("aggregate: unknown group_by key '", key, "'"));
}

}  // namespace

std::vector<SummaryRow> aggregate(const std::vector<MetricsRecord>& records,
                                  const std::vector<std::string>& group_by) {
  if (records.empty()) throw Error("aggregate: no records");
  struct Bucket {
    std::map<std::string, std::vector<double>> metric_values;
    std::size_t flagged = 0;
  };
  std::map<std::string, Bucket> buckets;
  for (const MetricsRecord& r : records) {
    std::string key;
    for (std::size_t i = 0; i < group_by.size(); ++i) {
      if (i > 0) key += '|';
      key += group_by[i] + '=' + provenance_key_value(r, group_by[i]);
    }
    Bucket& b = buckets[key];
    if (r.flagged) {
      b.flagged += 1;
      continue;
    }
    b.metric_values["eod_tpr"].push_back(r.eod_tpr);
    b.metric_values["eod_fpr"].push_back(r.eod_fpr);
    b.metric_values["abs_eod_tpr"].push_back(std::abs(r.eod_tpr));
    b.metric_values["abs_eod_fpr"].push_back(std::abs(r.eod_fpr));
    b.metric_values["f1"].push_back(r.f1);
    b.metric_values["minority_prop"].push_back(r.minority_prop);
  }
  std::vector<SummaryRow> rows;
  for (const auto& [key, bucket] : buckets) {
    for (const auto& [metric, values] : bucket.metric_values) {
      rows.push_back(
          SummaryRow{key, metric, summarize(values), bucket.flagged});
    }
    if (bucket.metric_values.empty()) {
      // Every record in the group was flagged; keep the group visible.
      rows.push_back(SummaryRow{key, "none", SummaryStats{}, bucket.flagged});
    }
  }
  return rows;
}

}  // namespace fairsynth
