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

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gecforge/category.hpp"
#include "gecforge/profile.hpp"
#include "gecforge/textnorm.hpp"

namespace gecforge {

enum class Split { kTrain, kDev, kTest };

std::string_view to_string(Split split);
Split parse_split(std::string_view s);

inline constexpr std::string_view kInputColumn = "Input sentence";
inline constexpr std::string_view kOutputColumn = "Output sentence";

struct SentencePair {
  std::string input;
  std::string output;
  /// 0-based CSV data row.
  std::size_t row = 0;
  Split split = Split::kTrain;
  Language lang = Language::kHindi;

  friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

struct LoadOptions {
  /// Drop pairs where either side is null/blank.
  bool drop_nulls = false;
  /// Drop exact (input, output) repeats after normalization, keeping the
  /// first occurrence.
  bool drop_duplicates = false;
};

/// Parses a two-column shared-task CSV ("Input sentence", "Output
/// sentence", in that order). Null cells ("", "nan", "null", "none") become
/// empty strings; everything else is normalized with `policy`.
std::vector<SentencePair> parse_pairs(std::string_view csv_text, Language lang,
                                      Split split,
                                      const NormalizationPolicy& policy,
                                      const LoadOptions& options = {});

/// File variant of parse_pairs; errors name the path.
std::vector<SentencePair> load_pairs(const std::filesystem::path& path,
                                     Language lang, Split split,
                                     const NormalizationPolicy& policy,
                                     const LoadOptions& options = {});

struct DistributionReport {
  Language lang = Language::kHindi;
  Split split = Split::kTrain;
  std::size_t total = 0;
  std::array<std::size_t, kCategoryCount> counts{};
  std::array<ErrorCategory, kCategoryCount> precedence_order = kPrecedenceOrder;
  /// Ingestion policy applied before classification, when known.
  std::optional<NormalizationPolicy> normalization;

  std::size_t count(ErrorCategory c) const { return counts[category_index(c)]; }
  friend bool operator==(const DistributionReport&,
                         const DistributionReport&) = default;
};

/// Classifies every pair and tallies labels. Pairs must share language and
/// split (InputError otherwise); an empty list yields an all-zero report for
/// the profile's language.
DistributionReport analyze(std::span<const SentencePair> pairs,
                           const LanguageProfile& profile);

}  // namespace gecforge
