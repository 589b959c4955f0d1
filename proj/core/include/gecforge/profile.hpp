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

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gecforge {

enum class Language { kHindi, kMalayalam };

/// "hi" / "ml".
std::string_view language_code(Language lang);
/// Throws InputError for anything other than "hi" or "ml".
Language parse_language(std::string_view code);

struct CodepointRange {
  char32_t first;
  char32_t last;

  constexpr bool contains(char32_t cp) const {
    return cp >= first && cp <= last;
  }
  friend constexpr bool operator==(const CodepointRange&,
                                   const CodepointRange&) = default;
};

enum class Script { kDevanagari, kMalayalam, kLatin, kOther };

std::string_view script_name(Script script);

/// Block-based script of a code point. Returns kOther for anything outside
/// the Devanagari, Malayalam and Latin letter blocks.
Script script_of(char32_t cp);

/// Raw lexicon as read from a lexicon file.
struct Lexicon {
  std::vector<std::string> auxiliaries;
  std::vector<std::string> postpositions;
  std::vector<std::string> suffixes;
};

/// Parses the `[auxiliaries] [postpositions] [suffixes]` section format.
/// '#' starts a comment; blank lines are ignored. Unknown sections and
/// entries before the first section raise SchemaError.
Lexicon parse_lexicon(std::string_view text);
Lexicon load_lexicon_file(const std::filesystem::path& path);

/// The shipped lexicon source text for a language.
std::string_view default_lexicon_text(Language lang);

/// Per-language resources consumed by the tokenizer and classifier.
/// Immutable once built.
class LanguageProfile {
 public:
  /// Built from the shipped lexicon.
  static const LanguageProfile& builtin(Language lang);

  /// Entries are NFKC-normalized; suffixes are deduplicated and sorted
  /// longest-first. A Malayalam lexicon with postpositions is rejected.
  static LanguageProfile from_lexicon(Language lang, const Lexicon& lexicon);

  Language language() const { return language_; }
  std::string_view name() const { return language_code(language_); }
  const std::vector<CodepointRange>& script_ranges() const {
    return script_ranges_;
  }
  Script primary_script() const { return primary_script_; }
  const std::set<std::string>& auxiliaries() const { return auxiliaries_; }
  const std::set<std::string>& postpositions() const { return postpositions_; }
  const std::vector<std::string>& suffixes() const { return suffixes_; }
  CodepointRange digit_range() const { return digit_range_; }
  /// "Syntax/Case/Agreement" for Hindi, "Syntax/Agreement" for Malayalam.
  const std::string& syntax_label() const { return syntax_label_; }
  /// Sentence-final mark appended by the hypothesis post-processor.
  char32_t default_terminal() const { return default_terminal_; }

  bool in_script(char32_t cp) const;
  bool is_syntax_word(std::string_view token) const {
    return auxiliaries_.contains(std::string(token)) ||
           postpositions_.contains(std::string(token));
  }

 private:
  LanguageProfile() = default;

  Language language_ = Language::kHindi;
  std::vector<CodepointRange> script_ranges_;
  Script primary_script_ = Script::kDevanagari;
  std::set<std::string> auxiliaries_;
  std::set<std::string> postpositions_;
  std::vector<std::string> suffixes_;
  CodepointRange digit_range_{0, 0};
  std::string syntax_label_;
  char32_t default_terminal_ = U'.';
};

/// Loads `path` if given, else the GEC_FORGE_LEXICON environment variable,
/// else the shipped lexicon.
LanguageProfile resolve_profile(Language lang,
                                const std::filesystem::path* lexicon_path);

}  // namespace gecforge
