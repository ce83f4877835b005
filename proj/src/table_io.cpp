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

#include "fairsynth/table_io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace fairsynth {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(detail::concat("cannot open '", path, "'"));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == delim) {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

bool parse_number(const std::string& text, double* out) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || errno == ERANGE) return false;
  while (*end == ' ') ++end;
  if (*end != '\0') return false;
  *out = v;
  return true;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::uint32_t ColumnSpec::cardinality() const {
  if (const auto* cat = std::get_if<CategoricalSpec>(&kind)) {
    return static_cast<std::uint32_t>(cat->values.size());
  }
  const auto& cont = std::get<ContinuousSpec>(kind);
  return static_cast<std::uint32_t>(cont.edges.size() - 1);
}

Schema SchemaSpec::to_schema() const {
  std::vector<Column> cols;
  cols.reserve(columns.size());
  for (const ColumnSpec& c : columns) cols.push_back({c.name, c.cardinality()});
  return Schema(std::move(cols), column_index(protected_column),
                column_index(label_column), max_domain_cells);
}

std::size_t SchemaSpec::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == name) return i;
  }
  throw Error(detail::concat("schema spec: no column named '", name, "'"));
}

std::string SchemaSpec::decode(std::size_t col, std::uint32_t code) const {
  const ColumnSpec& spec = columns.at(col);
  if (const auto* cat = std::get_if<CategoricalSpec>(&spec.kind)) {
    return cat->values.at(code);
  }
  const auto& edges = std::get<ContinuousSpec>(spec.kind).edges;
  const bool last = code + 2 == edges.size();
  return detail::concat("[", format_double(edges.at(code)), ",",
                        format_double(edges.at(code + 1)), last ? "]" : ")");
}

SchemaSpec parse_schema_spec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(detail::concat("schema spec: invalid JSON: ", e.what()));
  }
  SchemaSpec spec;
  if (doc.contains("delimiter")) {
    const std::string d = doc["delimiter"].get<std::string>();
    if (d.size() != 1) throw Error("schema spec: delimiter must be one char");
    spec.delimiter = d[0];
  }
  if (doc.contains("max_domain_cells")) {
    spec.max_domain_cells = doc["max_domain_cells"].get<std::uint64_t>();
  }
  if (!doc.contains("columns") || !doc["columns"].is_array()) {
    throw Error("schema spec: missing 'columns' array");
  }
  for (const auto& col : doc["columns"]) {
    ColumnSpec c;
    c.name = col.at("name").get<std::string>();
    if (col.contains("categories")) {
      CategoricalSpec cat;
      for (const auto& v : col["categories"]) {
        cat.values.push_back(v.get<std::string>());
      }
      if (cat.values.size() < 2) {
        throw Error(detail::concat("schema spec: column '", c.name,
                                   "' needs at least 2 categories"));
      }
      c.kind = std::move(cat);
    } else if (col.contains("edges")) {
      ContinuousSpec cont;
      for (const auto& v : col["edges"]) cont.edges.push_back(v.get<double>());
      if (cont.edges.size() < 3) {
        throw Error(detail::concat("schema spec: column '", c.name,
                                   "' needs at least 3 bin edges"));
      }
      if (!std::is_sorted(cont.edges.begin(), cont.edges.end()) ||
          std::adjacent_find(cont.edges.begin(), cont.edges.end()) !=
              cont.edges.end()) {
        throw Error(detail::concat("schema spec: column '", c.name,
                                   "': bin edges must strictly increase"));
      }
      c.kind = std::move(cont);
    } else {
      throw Error(detail::concat("schema spec: column '", c.name,
                                 "' needs 'categories' or 'edges'"));
    }
    spec.columns.push_back(std::move(c));
  }
  spec.protected_column = doc.at("protected").get<std::string>();
  spec.label_column = doc.at("label").get<std::string>();
  spec.to_schema();  // validate cardinalities, indices, domain cap
  return spec;
}

SchemaSpec load_schema_spec(const std::string& path) {
  return parse_schema_spec(read_file(path));
}

namespace {

// Maps one field to its code, or throws with the row/column location.
std::uint32_t encode_field(const ColumnSpec& spec, const std::string& raw,
                           const std::string& origin, std::size_t row) {
  if (const auto* cat = std::get_if<CategoricalSpec>(&spec.kind)) {
    for (std::size_t i = 0; i < cat->values.size(); ++i) {
      if (cat->values[i] == raw) return static_cast<std::uint32_t>(i);
    }
    throw Error(detail::concat(origin, ": row ", row, ", column '", spec.name,
                               "': unknown value '", raw, "'"));
  }
  const auto& edges = std::get<ContinuousSpec>(spec.kind).edges;
  double v = 0;
  if (!parse_number(raw, &v)) {
    // Accept a bin label emitted by save_table so synthetic tables reload.
    for (std::uint32_t b = 0; b + 1 < edges.size(); ++b) {
      const bool last = b + 2 == edges.size();
      const std::string label =
          detail::concat("[", format_double(edges[b]), ",",
                         format_double(edges[b + 1]), last ? "]" : ")");
      if (label == raw) return b;
    }
    throw Error(detail::concat(origin, ": row ", row, ", column '", spec.name,
                               "': cannot parse '", raw, "' as a number"));
  }
  if (v < edges.front() || v > edges.back()) {
    throw Error(detail::concat(origin, ": row ", row, ", column '", spec.name,
                               "': value ", raw, " outside bin range [",
                               format_double(edges.front()), ", ",
                               format_double(edges.back()), "]"));
  }
  auto it = std::upper_bound(edges.begin(), edges.end(), v);
  std::size_t bin = static_cast<std::size_t>(it - edges.begin());
  bin = bin == 0 ? 0 : bin - 1;
  if (bin + 1 >= edges.size()) bin = edges.size() - 2;  // v == last edge
  return static_cast<std::uint32_t>(bin);
}

}  // namespace

Dataset parse_table(const std::string& text, const SchemaSpec& spec,
                    const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(detail::concat(origin, ": empty file"));
  }
  const std::vector<std::string> header = split_line(line, spec.delimiter);

  // Column order in the file may differ from the spec; map by name.
  std::vector<std::size_t> field_of(spec.columns.size());
  for (std::size_t c = 0; c < spec.columns.size(); ++c) {
    auto it = std::find(header.begin(), header.end(), spec.columns[c].name);
    if (it == header.end()) {
      throw Error(detail::concat(origin, ": declared column '",
                                 spec.columns[c].name,
                                 "' missing from header"));
    }
    field_of[c] = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<std::uint32_t> flat;
  std::size_t row = 0;
  std::size_t missing_rows = 0;
  std::string first_missing;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_line(line, spec.delimiter);
    if (fields.size() != header.size()) {
      throw Error(detail::concat(origin, ": row ", row, ": ragged row (",
                                 fields.size(), " fields, header has ",
                                 header.size(), ")"));
    }
    bool missing = false;
    for (std::size_t c = 0; c < spec.columns.size(); ++c) {
      if (fields[field_of[c]].empty()) {
        missing = true;
        if (first_missing.empty()) {
          first_missing = detail::concat("row ", row, ", column '",
                                         spec.columns[c].name, "'");
        }
      }
    }
    if (missing) {
      ++missing_rows;
      continue;
    }
    for (std::size_t c = 0; c < spec.columns.size(); ++c) {
      flat.push_back(
          encode_field(spec.columns[c], fields[field_of[c]], origin, row));
    }
  }
  if (missing_rows > 0) {
    throw Error(detail::concat(origin, ": ", missing_rows,
                               " row(s) with missing values (first at ",
                               first_missing,
                               "); missing data is not supported"));
  }
  return Dataset(spec.to_schema(), std::move(flat), {"loaded"});
}

Dataset load_table(const std::string& path, const SchemaSpec& spec) {
  return parse_table(read_file(path), spec, path);
}

std::string format_table(const Dataset& data, const SchemaSpec& spec) {
  std::ostringstream out;
  for (std::size_t c = 0; c < spec.columns.size(); ++c) {
    if (c > 0) out << spec.delimiter;
    out << spec.columns[c].name;
  }
  out << '\n';
  for (std::size_t i = 0; i < data.row_count(); ++i) {
    for (std::size_t c = 0; c < spec.columns.size(); ++c) {
      if (c > 0) out << spec.delimiter;
      out << spec.decode(c, data.at(i, c));
    }
    out << '\n';
  }
  return out.str();
}

void save_table(const Dataset& data, const SchemaSpec& spec,
                const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(detail::concat("cannot write '", path, "'"));
  out << format_table(data, spec);
}

}  // namespace fairsynth
