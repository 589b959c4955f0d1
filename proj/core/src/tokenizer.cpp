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

#include "gecforge/tokenizer.hpp"

#include <algorithm>
#include <optional>

#include "gecforge/textnorm.hpp"
#include "gecforge/unicode.hpp"

namespace gecforge {

namespace {

enum class CharClass { kSpace, kWord, kDigit, kPunct };

CharClass classify_char(char32_t cp) {
  if (unicode::is_white_space(cp)) return CharClass::kSpace;
  if (unicode::is_decimal_digit(cp)) return CharClass::kDigit;
  if (unicode::is_letter(cp) || unicode::is_mark(cp) || unicode::is_number(cp) ||
      is_joiner(cp)) {
    return CharClass::kWord;
  }
  return CharClass::kPunct;
}

// Script that a word character pins the run to; nullopt for characters that
// inherit the script of whatever precedes them (marks outside the known
// blocks, joiners).
std::optional<Script> pinned_script(char32_t cp) {
  if (unicode::is_letter(cp) || unicode::is_number(cp)) return script_of(cp);
  const Script s = script_of(cp);
  if (s != Script::kOther) return s;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kScriptWord: return "script_word";
    case TokenKind::kDigitRun: return "digit_run";
    case TokenKind::kPunctSymbol: return "punct_symbol";
  }
  return "script_word";
}

std::vector<Token> tokenize(std::string_view s, const LanguageProfile&) {
  const std::u32string text = unicode::decode_utf8(s);
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const CharClass cls = classify_char(text[i]);
    if (cls == CharClass::kSpace) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    Token tok;
    tok.begin = i;
    switch (cls) {
      case CharClass::kDigit:
        tok.kind = TokenKind::kDigitRun;
        while (j < text.size() && classify_char(text[j]) == CharClass::kDigit) ++j;
        break;
      case CharClass::kPunct:
        tok.kind = TokenKind::kPunctSymbol;
        while (j < text.size() && classify_char(text[j]) == CharClass::kPunct) ++j;
        break;
      default: {
        tok.kind = TokenKind::kScriptWord;
        std::optional<Script> script = pinned_script(text[i]);
        while (j < text.size() && classify_char(text[j]) == CharClass::kWord) {
          const auto next = pinned_script(text[j]);
          if (next && script && *next != *script) break;
          if (!script) script = next;
          ++j;
        }
        tok.script = script.value_or(Script::kOther);
        break;
      }
    }
    tok.end = j;
    tok.text = unicode::encode_utf8(std::u32string_view(text).substr(i, j - i));
    tokens.push_back(std::move(tok));
    i = j;
  }
  return tokens;
}

bool is_punct(std::string_view token_text, const LanguageProfile&) {
  const std::u32string text = unicode::decode_utf8(token_text);
  return std::none_of(text.begin(), text.end(), [](char32_t cp) {
    return unicode::is_alnum(cp) || is_joiner(cp);
  });
}

bool is_punct(const Token& token, const LanguageProfile& profile) {
  return is_punct(token.text, profile);
}

bool same_script(const Token& a, const Token& b, const LanguageProfile&) {
  auto letters_script = [](const Token& t) -> std::optional<Script> {
    if (t.kind != TokenKind::kScriptWord) return std::nullopt;
    std::optional<Script> found;
    for (char32_t cp : unicode::decode_utf8(t.text)) {
      if (!unicode::is_letter(cp)) continue;
      const Script s = script_of(cp);
      if (s == Script::kOther) return std::nullopt;
      if (found && *found != s) return std::nullopt;
      found = s;
    }
    return found;
  };
  const auto sa = letters_script(a);
  const auto sb = letters_script(b);
  return sa && sb && *sa == *sb;
}

std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

}  // namespace gecforge
