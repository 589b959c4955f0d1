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

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "gecforge/profile.hpp"

namespace gecforge {

enum class DandaPolicy { kKeepDanda, kMapDandaToPeriod, kMapPeriodToDanda };
enum class DigitPolicy { kToAscii, kKeepNative };

std::string_view to_string(DandaPolicy policy);
std::string_view to_string(DigitPolicy policy);
DandaPolicy parse_danda_policy(std::string_view s);
DigitPolicy parse_digit_policy(std::string_view s);

/// Ingestion normalization. NFKC is always applied; everything else is
/// switchable.
struct NormalizationPolicy {
  bool strip_invisibles = true;
  /// Also remove ZWJ/ZWNJ. Only consulted when strip_invisibles is set.
  bool strip_joiners = true;
  bool collapse_whitespace = true;
  bool unify_terminal_punct = false;
  DandaPolicy danda = DandaPolicy::kKeepDanda;
  DigitPolicy digits = DigitPolicy::kKeepNative;

  /// Applies `key = value` settings (keys are the field names above, plus
  /// `danda_policy` / `digit_policy`). Unknown keys are ignored; bad values
  /// throw InputError.
  void apply(const std::map<std::string, std::string>& settings);

  friend bool operator==(const NormalizationPolicy&,
                         const NormalizationPolicy&) = default;
};

/// The view the classifier compares: NFKC, invisibles stripped, digits as
/// ASCII, single spaces, danda untouched.
NormalizationPolicy comparison_policy();

/// Fixed invisible set: ZWSP, ZWNJ, ZWJ, BOM, SHY, LRM, RLM.
bool is_invisible(char32_t cp);
bool is_joiner(char32_t cp);
bool is_native_digit(char32_t cp);
/// Devanagari / Malayalam digit to ASCII; every other code point unchanged.
char32_t native_digit_to_ascii(char32_t cp);
/// . । ? !
bool is_terminal_mark(char32_t cp);

/// Throws DecodeError on invalid UTF-8.
std::string normalize_text(std::string_view s, const NormalizationPolicy& policy);

/// Letters, marks and digits only, in order, after NFKC and native-digit
/// mapping. Two strings with equal projections differ only in
/// punctuation, symbols or whitespace.
std::string alnum_projection(std::string_view s, const LanguageProfile& profile);

/// Removes a leading echo of `prompt_prefix` (repeatedly, ignoring leading
/// whitespace).
std::string strip_prompt_echo(std::string_view s,
                              std::optional<std::string_view> prompt_prefix);

/// Surface clean-up of a raw model output line: prompt echo removal,
/// whitespace collapse, punctuation spacing and a single sentence-final
/// mark. Letters and digits are never touched.
std::string postprocess_hypothesis(std::string_view s,
                                   std::optional<std::string_view> prompt_prefix,
                                   const LanguageProfile& profile);

}  // namespace gecforge
