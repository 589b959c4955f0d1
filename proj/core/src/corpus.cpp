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

#include "gecforge/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "gecforge/classifier.hpp"
#include "gecforge/csv.hpp"
#include "gecforge/error.hpp"

namespace gecforge {

namespace {

std::string_view trim_ascii(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

std::string_view to_string(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "train";
}

Split parse_split(std::string_view s) {
  if (s == "train") return Split::kTrain;
  if (s == "dev") return Split::kDev;
  if (s == "test") return Split::kTest;
  throw InputError("unknown split '" + std::string(s) +
                   "' (expected train, dev or test)");
}

std::vector<SentencePair> parse_pairs(std::string_view csv_text, Language lang,
                                      Split split,
                                      const NormalizationPolicy& policy,
                                      const LoadOptions& options) {
  const CsvTable table = parse_csv(csv_text);
  if (table.header.size() < 2 || trim_ascii(table.header[0]) != kInputColumn ||
      trim_ascii(table.header[1]) != kOutputColumn) {
    std::string found;
    for (const auto& h : table.header) {
      if (!found.empty()) found += ", ";
      found += "\"" + h + "\"";
    }
    throw SchemaError("expected CSV header \"" + std::string(kInputColumn) +
                      "\", \"" + std::string(kOutputColumn) + "\"; found " +
                      (found.empty() ? std::string("nothing") : found));
  }

  auto clean = [&](const std::string& cell, std::size_t row) {
    try {
      if (nullish(cell)) return std::string();
      return normalize_text(cell, policy);
    } catch (const DecodeError& e) {
      throw ParseError("CSV data row " + std::to_string(row) + ": " + e.what(),
                       row);
    }
  };

  std::vector<SentencePair> pairs;
  pairs.reserve(table.rows.size());
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    SentencePair p;
    p.input = clean(table.rows[r][0], r);
    p.output = clean(table.rows[r][1], r);
    p.row = r;
    p.split = split;
    p.lang = lang;
    if (options.drop_nulls && (p.input.empty() || p.output.empty())) continue;
    if (options.drop_duplicates && !seen.emplace(p.input, p.output).second) {
      continue;
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<SentencePair> load_pairs(const std::filesystem::path& path,
                                     Language lang, Split split,
                                     const NormalizationPolicy& policy,
                                     const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open CSV file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pairs(buf.str(), lang, split, policy, options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.row());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

DistributionReport analyze(std::span<const SentencePair> pairs,
                           const LanguageProfile& profile) {
  DistributionReport report;
  report.lang = profile.language();
  if (!pairs.empty()) report.split = pairs.front().split;
  for (const auto& p : pairs) {
    if (p.split != report.split || p.lang != report.lang) {
      throw InputError("analyze: pair at row " + std::to_string(p.row) +
                       " does not share the language/split of the batch");
    }
    ++report.counts[category_index(classify_pair(p.input, p.output, profile).category)];
  }
  report.total = pairs.size();
  return report;
}

}  // namespace gecforge
