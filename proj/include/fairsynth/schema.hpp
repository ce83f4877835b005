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

#ifndef FAIRSYNTH_SCHEMA_HPP_
#define FAIRSYNTH_SCHEMA_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairsynth/error.hpp"

namespace fairsynth {

// Hard ceiling on the product domain so the MWEM histogram stays explicit.
// Schemas exceeding it are rejected at ingestion with a hint to coarsen bins.
inline constexpr std::uint64_t kDefaultMaxDomainCells = 1ull << 22;

struct Column {
  std::string name;
  std::uint32_t cardinality = 0;

  bool operator==(const Column&) const = default;
};

// Discretized tabular schema: every column is categorical after ingestion,
// with a designated binary protected attribute and binary label. Synthesizer
// internals also handle designation-free schemas (QUAIL strips the label
// before running its base synthesizer); group accounting requires them.
class Schema {
 public:
  Schema(std::vector<Column> columns, std::size_t protected_attr,
         std::size_t label,
         std::uint64_t max_domain_cells = kDefaultMaxDomainCells);

  // Feature-only schema without protected/label designations.
  explicit Schema(std::vector<Column> columns,
                  std::uint64_t max_domain_cells = kDefaultMaxDomainCells);

  const std::vector<Column>& columns() const { return columns_; }
  std::size_t column_count() const { return columns_.size(); }
  bool has_designations() const {
    return protected_attr_.has_value() && label_.has_value();
  }
  std::size_t protected_attr() const;
  std::size_t label() const;
  std::uint64_t domain_size() const { return domain_size_; }

  bool operator==(const Schema& other) const = default;

 private:
  void validate(std::uint64_t max_domain_cells);

  std::vector<Column> columns_;
  std::optional<std::size_t> protected_attr_;
  std::optional<std::size_t> label_;
  std::uint64_t domain_size_ = 0;
};

// Mixed-radix strides for flattening a code vector into one domain index:
// index = sum_c code[c] * stride[c], with the last column varying fastest.
std::vector<std::uint64_t> domain_strides(const Schema& schema);

std::uint64_t encode_cell(const Schema& schema,
                          std::span<const std::uint32_t> codes);
std::vector<std::uint32_t> decode_cell(const Schema& schema,
                                       std::uint64_t index);

// Immutable table of integer-coded rows. Rows are stored flat, row-major.
// The lineage list records the processing steps a dataset has been through
// ("test-split", "undersampled", ...); the harness uses it to assert that
// pre-processing never touches held-out data.
class Dataset {
 public:
  Dataset(Schema schema, std::vector<std::uint32_t> flat_codes,
          std::vector<std::string> lineage = {});

  const Schema& schema() const { return schema_; }
  std::size_t row_count() const { return rows_; }
  std::uint32_t at(std::size_t row, std::size_t col) const {
    return codes_[row * schema_.column_count() + col];
  }
  std::span<const std::uint32_t> row(std::size_t i) const {
    const std::size_t w = schema_.column_count();
    return {codes_.data() + i * w, w};
  }
  std::span<const std::uint32_t> flat() const { return codes_; }

  const std::vector<std::string>& lineage() const { return lineage_; }
  bool lineage_contains(const std::string& step) const;
  Dataset with_lineage(std::string step) const;

 private:
  Schema schema_;
  std::vector<std::uint32_t> codes_;
  std::size_t rows_;
  std::vector<std::string> lineage_;
};

// One of the four (protected attribute, label) cells.
struct GroupKey {
  int a = 0;
  int y = 0;
  std::string to_string() const {
    return detail::concat("(a=", a, ",y=", y, ")");
  }
};

// Counts over the four groups, indexed a*2 + y.
struct GroupCounts {
  std::array<std::size_t, 4> counts{};
  std::size_t at(int a, int y) const { return counts[a * 2 + y]; }
  std::size_t total() const {
    return counts[0] + counts[1] + counts[2] + counts[3];
  }
  std::size_t minimum() const;
  GroupKey argmin() const;
};

GroupCounts group_counts(const Dataset& data);

// min group count / n; 0.25 exactly when all four groups are equal.
double minority_proportion(const Dataset& data);

struct SplitPair {
  Dataset train;
  Dataset test;
  std::uint64_t seed = 0;
};

// Uniform (unstratified) split; |test| = round(test_fraction * n).
// Deterministic given seed; train/test carry lineage tags.
SplitPair split_train_test(const Dataset& data, double test_fraction,
                           std::uint64_t seed);

}  // namespace fairsynth

#endif  // FAIRSYNTH_SCHEMA_HPP_
