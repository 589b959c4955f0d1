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

#include "gecforge/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <string>

#include "gecforge/error.hpp"

namespace gecforge::unicode {

namespace {

[[noreturn]] void throw_decode(std::size_t offset, const char* why) {
  throw DecodeError("invalid UTF-8 at byte offset " + std::to_string(offset) +
                        ": " + why,
                    offset);
}

const icu::Normalizer2& nfkc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFKCInstance(status);
  if (U_FAILURE(status) || norm == nullptr) {
    throw Error(std::string("ICU NFKC normalizer unavailable: ") +
                u_errorName(status));
  }
  return *norm;
}

bool category_in(char32_t cp, uint32_t mask) {
  return (U_GET_GC_MASK(static_cast<UChar32>(cp)) & mask) != 0;
}

}  // namespace

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
      min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
      min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
      min = 0x10000;
    } else {
      throw_decode(i, "unexpected lead byte");
    }
    if (i + len > n) throw_decode(i, "truncated sequence");
    for (int k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(bytes[i + k]);
      if ((b & 0xC0) != 0x80) throw_decode(i + k, "expected continuation byte");
      cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min) throw_decode(i, "overlong encoding");
    if (cp > 0x10FFFF) throw_decode(i, "code point above U+10FFFF");
    if (cp >= 0xD800 && cp <= 0xDFFF) throw_decode(i, "encoded surrogate");
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

std::u32string nfkc(std::u32string_view text) {
  const auto& norm = nfkc_instance();
  icu::UnicodeString src = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
  UErrorCode status = U_ZERO_ERROR;
  if (norm.isNormalized(src, status) && U_SUCCESS(status)) {
    return std::u32string(text);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString dst = norm.normalize(src, status);
  if (U_FAILURE(status)) {
    throw Error(std::string("NFKC normalization failed: ") +
                u_errorName(status));
  }
  std::u32string out(static_cast<std::size_t>(dst.countChar32()), U'\0');
  status = U_ZERO_ERROR;
  dst.toUTF32(reinterpret_cast<UChar32*>(out.data()),
              static_cast<int32_t>(out.size()), status);
  if (U_FAILURE(status) && status != U_STRING_NOT_TERMINATED_WARNING) {
    throw Error(std::string("UTF-32 conversion failed: ") +
                u_errorName(status));
  }
  return out;
}

std::string nfkc(std::string_view utf8) {
  return encode_utf8(nfkc(decode_utf8(utf8)));
}

bool is_white_space(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

bool is_letter(char32_t cp) { return category_in(cp, U_GC_L_MASK); }
bool is_mark(char32_t cp) { return category_in(cp, U_GC_M_MASK); }
bool is_number(char32_t cp) { return category_in(cp, U_GC_N_MASK); }
bool is_decimal_digit(char32_t cp) { return category_in(cp, U_GC_ND_MASK); }

int decimal_value(char32_t cp) {
  if (!is_decimal_digit(cp)) return -1;
  return u_charDigitValue(static_cast<UChar32>(cp));
}

}  // namespace gecforge::unicode
