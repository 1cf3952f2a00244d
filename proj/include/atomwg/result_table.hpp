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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace awg {

enum class TableFormat { csv, json };

TableFormat parse_table_format(const std::string& s);

/// Column-labeled numeric table plus free-form JSON metadata. CSV output
/// carries the metadata as a single '#'-prefixed JSON line above the header.
class ResultTable {
 public:
  void add_column(const std::string& name, std::vector<double> values);
  /// Appends a row; the number of values must match the column count.
  void add_row(const std::vector<double>& values);
  void set_columns(const std::vector<std::string>& names);

  bool has_column(const std::string& name) const;
  const std::vector<double>& column(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }
  std::size_t rows() const;

  nlohmann::json& metadata() { return metadata_; }
  const nlohmann::json& metadata() const { return metadata_; }

  std::string to_csv() const;
  nlohmann::json to_json() const;
  static ResultTable from_csv(const std::string& text);
  static ResultTable from_json(const nlohmann::json& j);

  /// Writes via a temporary file and rename.
  void write(const std::filesystem::path& path, TableFormat format) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
  nlohmann::json metadata_ = nlohmann::json::object();
};

}  // namespace awg
