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

#include <string>
#include <string_view>
#include <vector>

#include "gecforge/category.hpp"
#include "gecforge/corpus.hpp"
#include "gecforge/profile.hpp"

namespace gecforge {

struct PromptSpec {
  Language lang = Language::kHindi;
  std::vector<ErrorCategory> prioritized;
  std::vector<ErrorCategory> deprioritized;
  std::vector<std::string> constraints;
  /// render_prompt() of the fields above.
  std::string rendered;
};

/// Builds the correction prompt for a language from its error
/// distribution. Error categories with a non-zero count are ordered by
/// descending count (ties by enum order), then Punctuation/Whitespace and
/// Morphology are moved to the front. Word-order and missing/extra-word
/// edits are always deprioritized. Throws InputError for an empty report.
PromptSpec synthesize_prompt(const DistributionReport& report,
                             const LanguageProfile& profile);

/// Instantiates the shipped template from the structured fields only.
std::string render_prompt(const PromptSpec& spec);

/// The shipped template text (versioned asset).
std::string_view prompt_template();

/// Lower-case hex SHA-256, used to fingerprint frozen prompts.
std::string sha256_hex(std::string_view data);

}  // namespace gecforge
