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

#include "gecforge/category.hpp"

#include "gecforge/error.hpp"

namespace gecforge {

std::string_view category_key(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kNullEmpty: return "null_empty";
    case ErrorCategory::kNoError: return "no_error";
    case ErrorCategory::kPunctWhitespace: return "punct_whitespace";
    case ErrorCategory::kWordOrder: return "word_order";
    case ErrorCategory::kMissingExtraWord: return "missing_extra_word";
    case ErrorCategory::kSyntaxAgreement: return "syntax_agreement";
    case ErrorCategory::kMorphology: return "morphology";
    case ErrorCategory::kSpelling: return "spelling";
    case ErrorCategory::kGrammarSyntax: return "grammar_syntax";
  }
  return "grammar_syntax";
}

std::string category_label(ErrorCategory c, const LanguageProfile& profile) {
  switch (c) {
    case ErrorCategory::kNullEmpty: return "Null/Empty Pair";
    case ErrorCategory::kNoError: return "No Error";
    case ErrorCategory::kPunctWhitespace: return "Punctuation/Whitespace";
    case ErrorCategory::kWordOrder: return "Word Order";
    case ErrorCategory::kMissingExtraWord: return "Missing/Extra Word";
    case ErrorCategory::kSyntaxAgreement: return profile.syntax_label();
    case ErrorCategory::kMorphology: return "Morphology (Inflection/Affix)";
    case ErrorCategory::kSpelling: return "Spelling/Orthography";
    case ErrorCategory::kGrammarSyntax: return "Grammar/Syntax";
  }
  return "Grammar/Syntax";
}

ErrorCategory parse_category(std::string_view text) {
  for (ErrorCategory c : kAllCategories) {
    if (text == category_key(c)) return c;
    if (text == category_label(c, LanguageProfile::builtin(Language::kHindi)) ||
        text == category_label(c, LanguageProfile::builtin(Language::kMalayalam))) {
      return c;
    }
  }
  throw InputError("unknown error category '" + std::string(text) + "'");
}

}  // namespace gecforge
