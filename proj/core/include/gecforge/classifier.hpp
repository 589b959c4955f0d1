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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gecforge/alignment.hpp"
#include "gecforge/category.hpp"
#include "gecforge/profile.hpp"

namespace gecforge {

/// Maximum code point edit distance for a replace pair to count as a
/// spelling slip.
inline constexpr std::size_t kSpellThreshold = 2;

struct ClassifierConstants {
  std::size_t spell_threshold;
};

constexpr ClassifierConstants constants() { return {kSpellThreshold}; }

/// Which short-circuit check decided the label.
enum class Stage {
  kNullEmpty = 1,
  kNoError = 2,
  kPunctProjection = 3,
  kWordOrder = 4,
  kAlignment = 5,
  kFallback = 6,
};

std::string_view to_string(Stage stage);

/// Trace of how a label was reached. Never affects the label itself.
struct Evidence {
  Stage stage = Stage::kFallback;
  bool saw_insert_delete = false;
  bool saw_replace = false;
  bool touched_syntax = false;
  bool saw_morphology = false;
  bool saw_spelling = false;
  /// Alignment of the comparison-view tokens (stage 5 and 6 only).
  std::vector<Opcode> ops;
  std::vector<std::string> input_tokens;
  std::vector<std::string> output_tokens;
  /// First auxiliary/postposition found in an edited segment.
  std::optional<std::string> syntax_hit;
  /// First token pair that set the morphology or spelling cue.
  std::optional<std::pair<std::string, std::string>> morphology_pair;
  std::optional<std::pair<std::string, std::string>> spelling_pair;
};

struct Classification {
  ErrorCategory category;
  Evidence evidence;
};

/// Blank after trimming, or case-insensitively "nan", "null" or "none".
bool nullish(std::string_view s);

/// Single-label, precedence-ordered classification of an (input, output)
/// pair:
///   1. Null/Empty if either side is nullish
///   2. No Error if the raw strings are identical
///   3. Punctuation/Whitespace if the alphanumeric projections agree
///   4. Word Order if the non-punctuation token multisets agree
///   5. alignment typing: insert/delete beats replace; within each the
///      syntax cue wins, then (replace only) morphology, spelling, grammar
///   6. Grammar/Syntax otherwise
Classification classify_pair(std::string_view input, std::string_view output,
                             const LanguageProfile& profile);

}  // namespace gecforge
