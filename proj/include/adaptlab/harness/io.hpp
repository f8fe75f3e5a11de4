// Copyright 2026 The adaptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace adaptlab {

/// Shortest decimal that round-trips to the same double.
std::string format_number(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180-style CSV: fields containing ',', '"' or newlines are quoted.
void write_csv(const Table& table, std::ostream& out);
void write_csv_file(const Table& table, const std::string& path);

/// Pretty-printed with two-space indent and a trailing newline.
void write_json_file(const nlohmann::json& doc, const std::string& path);

/// "runs/scan.csv" + ".json" -> "runs/scan.json"; no extension -> appended.
std::string replace_extension(const std::string& path, const std::string& ext);

}  // namespace adaptlab
