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
#include <string>
#include <string_view>
#include <vector>

#include "gecforge/profile.hpp"

namespace gecforge {

enum class TokenKind { kScriptWord, kDigitRun, kPunctSymbol };

std::string_view to_string(TokenKind kind);

struct Token {
  std::string text;
  TokenKind kind = TokenKind::kScriptWord;
  /// Script of the letters in a kScriptWord token; kOther for other kinds.
  Script script = Script::kOther;
  /// Code point offsets [begin, end) into the tokenized string.
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits into maximal runs of script-word, digit and punctuation/symbol
/// characters; whitespace separates tokens and is dropped. Word runs also
/// break where the script changes, so code-mixed text yields one token per
/// script. Combining marks and ZWJ/ZWNJ stay inside the word they follow.
///
/// Expects text already normalized with normalize_text; throws DecodeError
/// on invalid UTF-8.
std::vector<Token> tokenize(std::string_view s, const LanguageProfile& profile);

/// True iff no character is a letter, mark, number or joiner.
bool is_punct(const Token& token, const LanguageProfile& profile);
bool is_punct(std::string_view token_text, const LanguageProfile& profile);

/// True iff both are script words whose letters all come from one and the
/// same script.
bool same_script(const Token& a, const Token& b, const LanguageProfile& profile);

/// Texts of the tokens, in order.
std::vector<std::string> token_texts(const std::vector<Token>& tokens);

}  // namespace gecforge
