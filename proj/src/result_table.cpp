// Copyright 2026 The atomwg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "atomwg/result_table.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "atomwg/types.hpp"

namespace awg {

TableFormat parse_table_format(const std::string& s) {
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  throw Error(ErrorCategory::config, "unknown table format '" + s + "' (expected csv or json)");
}

void ResultTable::add_column(const std::string& name, std::vector<double> values) {
  if (has_column(name)) throw Error(ErrorCategory::domain, "duplicate column '" + name + "'");
  if (!columns_.empty() && values.size() != columns_.front().size()) {
    throw Error(ErrorCategory::domain, "column '" + name + "' has mismatched length");
  }
  names_.push_back(name);
  columns_.push_back(std::move(values));
}

void ResultTable::set_columns(const std::vector<std::string>& names) {
  names_ = names;
  columns_.assign(names.size(), {});
}

void ResultTable::add_row(const std::vector<double>& values) {
  if (values.size() != columns_.size()) {
    throw Error(ErrorCategory::domain, "row width does not match column count");
  }
  for (std::size_t i = 0; i < values.size(); ++i) columns_[i].push_back(values[i]);
}

bool ResultTable::has_column(const std::string& name) const {
  for (const auto& n : names_) {
    if (n == name) return true;
  }
  return false;
}

const std::vector<double>& ResultTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return columns_[i];
  }
  throw Error(ErrorCategory::domain, "no column named '" + name + "'");
}

std::size_t ResultTable::rows() const { return columns_.empty() ? 0 : columns_.front().size(); }

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string ResultTable::to_csv() const {
  std::ostringstream os;
  os << "# " << metadata_.dump() << "\n";
  for (std::size_t i = 0; i < names_.size(); ++i) os << (i ? "," : "") << names_[i];
  os << "\n";
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      os << (c ? "," : "") << format_double(columns_[c][r]);
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json ResultTable::to_json() const {
  nlohmann::json cols = nlohmann::json::object();
  nlohmann::json order = nlohmann::json::array();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    cols[names_[i]] = columns_[i];
    order.push_back(names_[i]);
  }
  return {{"metadata", metadata_}, {"column_order", order}, {"columns", cols}};
}

ResultTable ResultTable::from_json(const nlohmann::json& j) {
  ResultTable t;
  t.metadata_ = j.value("metadata", nlohmann::json::object());
  for (const auto& name : j.at("column_order")) {
    t.add_column(name.get<std::string>(), j.at("columns").at(name.get<std::string>()).get<std::vector<double>>());
  }
  return t;
}

ResultTable ResultTable::from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  ResultTable t;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) {
    throw Error(ErrorCategory::io, "CSV table lacks metadata line");
  }
  t.metadata_ = nlohmann::json::parse(line.substr(2));
  if (!std::getline(is, line)) throw Error(ErrorCategory::io, "CSV table lacks header");
  std::vector<std::string> names;
  {
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) names.push_back(cell);
  }
  t.set_columns(names);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream rs(line);
    std::string cell;
    while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
    t.add_row(row);
  }
  return t;
}

void ResultTable::write(const std::filesystem::path& path, TableFormat format) const {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorCategory::io, "cannot open " + tmp.string() + " for writing");
    if (format == TableFormat::csv) {
      os << to_csv();
    } else {
      os << to_json().dump(1) << "\n";
    }
    if (!os) throw Error(ErrorCategory::io, "failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace awg
