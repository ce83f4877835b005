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

#include "fairsynth/schema.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairsynth/rng.hpp"

namespace fairsynth {

Schema::Schema(std::vector<Column> columns, std::size_t protected_attr,
               std::size_t label, std::uint64_t max_domain_cells)
    : columns_(std::move(columns)),
      protected_attr_(protected_attr),
      label_(label) {
  if (protected_attr >= columns_.size() || label >= columns_.size()) {
    throw Error("schema: protected/label column index out of range");
  }
  if (protected_attr == label) {
    throw Error("schema: protected attribute and label must differ");
  }
  if (columns_[protected_attr].cardinality != 2) {
    throw Error("schema: protected attribute must be binary");
  }
  if (columns_[label].cardinality != 2) {
    throw Error("schema: label must be binary");
  }
  validate(max_domain_cells);
}

Schema::Schema(std::vector<Column> columns, std::uint64_t max_domain_cells)
    : columns_(std::move(columns)) {
  validate(max_domain_cells);
}

void Schema::validate(std::uint64_t max_domain_cells) {
  if (columns_.empty()) throw Error("schema: needs at least one column");
  for (const Column& c : columns_) {
    if (c.cardinality < 2) {
      throw Error(detail::concat("schema: column '", c.name,
                                 "' needs cardinality >= 2, got ",
                                 c.cardinality));
    }
  }
  domain_size_ = 1;
  for (const Column& c : columns_) {
    if (domain_size_ > max_domain_cells / c.cardinality) {
      throw Error(detail::concat(
          "schema: product domain exceeds the cap of ", max_domain_cells,
          " cells; use coarser bins or fewer columns"));
    }
    domain_size_ *= c.cardinality;
  }
}

std::size_t Schema::protected_attr() const {
  if (!protected_attr_) {
    throw Error("schema: no protected attribute designated");
  }
  return *protected_attr_;
}

std::size_t Schema::label() const {
  if (!label_) throw Error("schema: no label column designated");
  return *label_;
}

std::vector<std::uint64_t> domain_strides(const Schema& schema) {
  const std::size_t k = schema.column_count();
  std::vector<std::uint64_t> strides(k);
  std::uint64_t s = 1;
  for (std::size_t c = k; c-- > 0;) {
    strides[c] = s;
    s *= schema.columns()[c].cardinality;
  }
  return strides;
}

std::uint64_t encode_cell(const Schema& schema,
                          std::span<const std::uint32_t> codes) {
  const auto strides = domain_strides(schema);
  std::uint64_t idx = 0;
  for (std::size_t c = 0; c < codes.size(); ++c) idx += codes[c] * strides[c];
  return idx;
}

std::vector<std::uint32_t> decode_cell(const Schema& schema,
                                       std::uint64_t index) {
  const std::size_t k = schema.column_count();
  std::vector<std::uint32_t> codes(k);
  for (std::size_t c = k; c-- > 0;) {
    const std::uint32_t card = schema.columns()[c].cardinality;
    codes[c] = static_cast<std::uint32_t>(index % card);
    index /= card;
  }
  return codes;
}

Dataset::Dataset(Schema schema, std::vector<std::uint32_t> flat_codes,
                 std::vector<std::string> lineage)
    : schema_(std::move(schema)),
      codes_(std::move(flat_codes)),
      lineage_(std::move(lineage)) {
  const std::size_t w = schema_.column_count();
  if (codes_.size() % w != 0) {
    throw Error("dataset: flat code array is not a multiple of column count");
  }
  rows_ = codes_.size() / w;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t c = 0; c < w; ++c) {
      const std::uint32_t v = codes_[i * w + c];
      if (v >= schema_.columns()[c].cardinality) {
        throw Error(detail::concat("dataset: row ", i, ", column '",
                                   schema_.columns()[c].name, "': code ", v,
                                   " out of range (cardinality ",
                                   schema_.columns()[c].cardinality, ")"));
      }
    }
  }
}

bool Dataset::lineage_contains(const std::string& step) const {
  return std::find(lineage_.begin(), lineage_.end(), step) != lineage_.end();
}

Dataset Dataset::with_lineage(std::string step) const {
  std::vector<std::string> tags = lineage_;
  tags.push_back(std::move(step));
  return Dataset(schema_, codes_, std::move(tags));
}

std::size_t GroupCounts::minimum() const {
  return *std::min_element(counts.begin(), counts.end());
}

GroupKey GroupCounts::argmin() const {
  const std::size_t i = static_cast<std::size_t>(
      std::min_element(counts.begin(), counts.end()) - counts.begin());
  return GroupKey{static_cast<int>(i / 2), static_cast<int>(i % 2)};
}

GroupCounts group_counts(const Dataset& data) {
  GroupCounts out;
  const std::size_t a_col = data.schema().protected_attr();
  const std::size_t y_col = data.schema().label();
  for (std::size_t i = 0; i < data.row_count(); ++i) {
    out.counts[data.at(i, a_col) * 2 + data.at(i, y_col)] += 1;
  }
  return out;
}

double minority_proportion(const Dataset& data) {
  if (data.row_count() == 0) {
    throw Error("minority_proportion: dataset is empty");
  }
  const GroupCounts g = group_counts(data);
  return static_cast<double>(g.minimum()) /
         static_cast<double>(data.row_count());
}

SplitPair split_train_test(const Dataset& data, double test_fraction,
                           std::uint64_t seed) {
  if (data.row_count() < 2) {
    throw Error("split_train_test: need at least 2 rows");
  }
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error("split_train_test: test_fraction must lie in (0, 1)");
  }
  const std::size_t n = data.row_count();
  const std::size_t n_test = static_cast<std::size_t>(
      std::llround(test_fraction * static_cast<double>(n)));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Randomness rng(mix_seed(seed, {0x73706c6974ull}));  // "split"
  for (std::size_t i = n; i-- > 1;) {
    std::swap(order[i], order[rng.uniform_index(i + 1)]);
  }
  std::vector<std::size_t> test_idx(order.begin(), order.begin() + n_test);
  std::vector<std::size_t> train_idx(order.begin() + n_test, order.end());
  std::sort(test_idx.begin(), test_idx.end());
  std::sort(train_idx.begin(), train_idx.end());

  const std::size_t w = data.schema().column_count();
  auto gather = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::uint32_t> flat;
    flat.reserve(idx.size() * w);
    for (std::size_t i : idx) {
      const auto r = data.row(i);
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return flat;
  };

  std::vector<std::string> train_tags = data.lineage();
  train_tags.push_back("train-split");
  std::vector<std::string> test_tags = data.lineage();
  test_tags.push_back("test-split");
  return SplitPair{
      Dataset(data.schema(), gather(train_idx), std::move(train_tags)),
      Dataset(data.schema(), gather(test_idx), std::move(test_tags)), seed};
}

}  // namespace fairsynth
