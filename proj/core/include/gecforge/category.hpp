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
#include <string>
#include <string_view>

#include "gecforge/profile.hpp"

namespace gecforge {

/// The nine classifier labels. Enumerator order is the canonical column
/// order of every report.
enum class ErrorCategory {
  kNullEmpty,
  kNoError,
  kPunctWhitespace,
  kWordOrder,
  kMissingExtraWord,
  kSyntaxAgreement,
  kMorphology,
  kSpelling,
  kGrammarSyntax,
};

inline constexpr std::size_t kCategoryCount = 9;

inline constexpr std::array<ErrorCategory, kCategoryCount> kAllCategories = {
    ErrorCategory::kNullEmpty,        ErrorCategory::kNoError,
    ErrorCategory::kPunctWhitespace,  ErrorCategory::kWordOrder,
    ErrorCategory::kMissingExtraWord, ErrorCategory::kSyntaxAgreement,
    ErrorCategory::kMorphology,       ErrorCategory::kSpelling,
    ErrorCategory::kGrammarSyntax,
};

/// Order in which the classifier can emit labels: the global short-circuit
/// checks, then insert/delete resolution, then replace resolution.
inline constexpr std::array<ErrorCategory, kCategoryCount> kPrecedenceOrder = {
    ErrorCategory::kNullEmpty,        ErrorCategory::kNoError,
    ErrorCategory::kPunctWhitespace,  ErrorCategory::kWordOrder,
    ErrorCategory::kSyntaxAgreement,  ErrorCategory::kMissingExtraWord,
    ErrorCategory::kMorphology,       ErrorCategory::kSpelling,
    ErrorCategory::kGrammarSyntax,
};

constexpr std::size_t category_index(ErrorCategory c) {
  return static_cast<std::size_t>(c);
}

/// Stable machine key, e.g. "punct_whitespace".
std::string_view category_key(ErrorCategory c);

/// Human label; the syntax category renders per language
/// ("Syntax/Case/Agreement" for Hindi, "Syntax/Agreement" for Malayalam).
std::string category_label(ErrorCategory c, const LanguageProfile& profile);

/// Accepts a key or any label (either syntax rendering). Throws InputError.
ErrorCategory parse_category(std::string_view text);

}  // namespace gecforge
