// Copyright 2026 The gec-forge Authors.
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

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gecforge {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 reader: quoted fields may contain commas, doubled quotes and
/// line breaks; CRLF and a leading UTF-8 BOM are accepted; blank lines are
/// skipped. Every data row must have exactly as many fields as the header.
/// Throws ParseError with the 0-based data row on malformed input.
CsvTable parse_csv(std::string_view text);

/// Quotes a field when it contains a comma, quote or line break.
std::string csv_field(std::string_view field);
void write_csv_row(std::ostream& out, std::span<const std::string> fields);

}  // namespace gecforge
