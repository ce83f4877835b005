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

#ifndef FAIRSYNTH_TABLE_IO_HPP_
#define FAIRSYNTH_TABLE_IO_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fairsynth/schema.hpp"

namespace fairsynth {

struct CategoricalSpec {
  std::vector<std::string> values;
};

// Continuous columns are discretized at ingestion: k+1 edges define k bins
// [e0,e1), ..., [e_{k-1}, e_k], the last bin closed. Downstream code only
// ever sees the bin codes.
struct ContinuousSpec {
  std::vector<double> edges;
};

struct ColumnSpec {
  std::string name;
  std::variant<CategoricalSpec, ContinuousSpec> kind;
  std::uint32_t cardinality() const;
};

// Declares how to decode a delimited text table: per-column type, the
// protected/label column names, the field delimiter, and the domain cap.
struct SchemaSpec {
  std::vector<ColumnSpec> columns;
  std::string protected_column;
  std::string label_column;
  char delimiter = ',';
  std::uint64_t max_domain_cells = kDefaultMaxDomainCells;

  Schema to_schema() const;
  std::size_t column_index(const std::string& name) const;
  // Category string for categorical columns, "[lo,hi)" bin label otherwise.
  std::string decode(std::size_t col, std::uint32_t code) const;
};

SchemaSpec load_schema_spec(const std::string& path);
SchemaSpec parse_schema_spec(const std::string& json_text);

// Reads a delimited table (header row first) and maps every value to its
// integer code. Unknown categories, out-of-range values, ragged rows and
// missing declared columns are errors that name the offending row/column.
// Continuous fields accept either a number or a bin label previously emitted
// by save_table, so synthetic output reloads under the same spec.
Dataset load_table(const std::string& path, const SchemaSpec& spec);
Dataset parse_table(const std::string& text, const SchemaSpec& spec,
                    const std::string& origin);

// Writes the decoded table (categories and bin labels) with a header row.
void save_table(const Dataset& data, const SchemaSpec& spec,
                const std::string& path);
std::string format_table(const Dataset& data, const SchemaSpec& spec);

// Shortest round-trip decimal formatting; used for every number the toolkit
// persists so reruns are byte-identical.
std::string format_double(double value);

}  // namespace fairsynth

#endif  // FAIRSYNTH_TABLE_IO_HPP_
