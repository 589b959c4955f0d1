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

namespace gecforge::unicode {

/// Strict UTF-8 decoding. Rejects overlong forms, surrogates and values
/// above U+10FFFF; throws DecodeError carrying the offending byte offset.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

/// Unicode NFKC (compatibility decomposition + canonical composition).
std::u32string nfkc(std::u32string_view text);
std::string nfkc(std::string_view utf8);

bool is_white_space(char32_t cp);
bool is_letter(char32_t cp);       // L*
bool is_mark(char32_t cp);         // M*
bool is_number(char32_t cp);       // N*
bool is_decimal_digit(char32_t cp);  // Nd

/// Letters, combining marks and numbers.
inline bool is_alnum(char32_t cp) {
  return is_letter(cp) || is_mark(cp) || is_number(cp);
}

/// Numeric value of a decimal digit (Nd), -1 otherwise.
int decimal_value(char32_t cp);

inline constexpr char32_t kZeroWidthNonJoiner = U'\u200C';
inline constexpr char32_t kZeroWidthJoiner = U'\u200D';

}  // namespace gecforge::unicode
