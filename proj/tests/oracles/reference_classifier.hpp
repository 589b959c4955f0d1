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

// Straight-line reference classifier used as a test oracle. Character
// classes come from explicit code point tables rather than ICU, alignment
// comes from the difflib transcription in alignment_oracle.hpp and edit
// distance from the full-matrix routine. Inputs are assumed NFKC-stable and
// drawn from the alphabets in generators.hpp.

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alignment_oracle.hpp"
#include "gecforge/category.hpp"
#include "gecforge/profile.hpp"
#include "gecforge/unicode.hpp"

namespace gecforge::oracle {

enum class CharKind { kSpace, kInvisible, kLetter, kMark, kDigit, kPunct };
enum class OracleScript { kNone, kDeva, kMlym, kLatn };

struct CharInfo {
  CharKind kind;
  OracleScript script;
  int digit_value = -1;
};

inline bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

inline CharInfo char_info(char32_t cp) {
  using K = CharKind;
  using S = OracleScript;
  if (cp == U' ' || cp == U'\t' || cp == U'\n') return {K::kSpace, S::kNone};
  switch (cp) {
    case 0x200B: case 0x200C: case 0x200D: case 0xFEFF:
    case 0x00AD: case 0x200E: case 0x200F:
      return {K::kInvisible, S::kNone};
    default: break;
  }
  if (in(cp, U'0', U'9')) return {K::kDigit, S::kNone, static_cast<int>(cp - U'0')};
  if (in(cp, U'a', U'z') || in(cp, U'A', U'Z')) return {K::kLetter, S::kLatn};
  if (in(cp, 0x21, 0x2F) || in(cp, 0x3A, 0x40) || in(cp, 0x5B, 0x60) || in(cp, 0x7B, 0x7E)) {
    return {K::kPunct, S::kNone};
  }
  // Devanagari.
  if (in(cp, 0x0966, 0x096F)) return {K::kDigit, S::kDeva, static_cast<int>(cp - 0x0966)};
  if (cp == 0x0964 || cp == 0x0965 || cp == 0x0970) return {K::kPunct, S::kNone};
  if (in(cp, 0x0900, 0x0903) || in(cp, 0x093A, 0x093C) || in(cp, 0x093E, 0x094F) ||
      in(cp, 0x0951, 0x0957) || in(cp, 0x0962, 0x0963)) {
    return {K::kMark, S::kDeva};
  }
  if (in(cp, 0x0904, 0x0939) || cp == 0x093D || cp == 0x0950 || in(cp, 0x0958, 0x0961) ||
      in(cp, 0x0971, 0x097F)) {
    return {K::kLetter, S::kDeva};
  }
  // Malayalam.
  if (in(cp, 0x0D66, 0x0D6F)) return {K::kDigit, S::kMlym, static_cast<int>(cp - 0x0D66)};
  if (in(cp, 0x0D00, 0x0D03) || in(cp, 0x0D3B, 0x0D3C) || in(cp, 0x0D3E, 0x0D44) ||
      in(cp, 0x0D46, 0x0D48) || in(cp, 0x0D4A, 0x0D4D) || cp == 0x0D57 ||
      in(cp, 0x0D62, 0x0D63)) {
    return {K::kMark, S::kMlym};
  }
  if (in(cp, 0x0D05, 0x0D0C) || in(cp, 0x0D0E, 0x0D10) || in(cp, 0x0D12, 0x0D3A) ||
      cp == 0x0D3D || cp == 0x0D4E || in(cp, 0x0D5F, 0x0D61) || in(cp, 0x0D7A, 0x0D7F)) {
    return {K::kLetter, S::kMlym};
  }
  throw std::out_of_range("oracle: code point outside the oracle alphabet");
}

inline bool oracle_nullish(const std::u32string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && char_info(s[b]).kind == CharKind::kSpace) ++b;
  while (e > b && char_info(s[e - 1]).kind == CharKind::kSpace) --e;
  if (b == e) return true;
  std::string lowered;
  for (std::size_t i = b; i < e; ++i) {
    if (s[i] > 0x7F) return false;
    lowered.push_back(static_cast<char>(std::tolower(static_cast<int>(s[i]))));
  }
  return lowered == "nan" || lowered == "null" || lowered == "none";
}

inline std::u32string oracle_projection(const std::u32string& s) {
  std::u32string out;
  for (char32_t cp : s) {
    const CharInfo ci = char_info(cp);
    if (ci.kind == CharKind::kDigit) {
      out.push_back(U'0' + ci.digit_value);
    } else if (ci.kind == CharKind::kLetter || ci.kind == CharKind::kMark) {
      out.push_back(cp);
    }
  }
  return out;
}

struct OracleToken {
  std::u32string text;
  bool word = false;
  bool punct = false;
};

// Comparison view then tokenization: drop invisibles, fold digits to ASCII,
// split on spaces, then into runs of word / digit / punctuation characters.
// Word runs break where a letter or mark of one script follows another.
inline std::vector<OracleToken> oracle_tokens(const std::u32string& s) {
  std::u32string view;
  for (char32_t cp : s) {
    const CharInfo ci = char_info(cp);
    if (ci.kind == CharKind::kInvisible) continue;
    view.push_back(ci.kind == CharKind::kDigit ? U'0' + ci.digit_value : cp);
  }
  std::vector<OracleToken> out;
  auto group = [](char32_t cp) {
    switch (char_info(cp).kind) {
      case CharKind::kLetter:
      case CharKind::kMark: return 1;
      case CharKind::kDigit: return 2;
      case CharKind::kPunct: return 3;
      default: return 0;
    }
  };
  std::size_t i = 0;
  while (i < view.size()) {
    const int g = group(view[i]);
    if (g == 0) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    OracleScript script = char_info(view[i]).script;
    while (j < view.size() && group(view[j]) == g) {
      if (g == 1 && char_info(view[j]).script != script) break;
      ++j;
    }
    out.push_back({view.substr(i, j - i), g == 1, g == 3});
    i = j;
  }
  return out;
}

inline std::optional<OracleScript> letter_script(const OracleToken& t) {
  if (!t.word) return std::nullopt;
  std::optional<OracleScript> found;
  for (char32_t cp : t.text) {
    const CharInfo ci = char_info(cp);
    if (ci.kind != CharKind::kLetter) continue;
    if (found && *found != ci.script) return std::nullopt;
    found = ci.script;
  }
  return found;
}

inline bool oracle_suffix_change(const std::u32string& a, const std::u32string& b,
                                 const std::vector<std::u32string>& suffixes) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  const std::u32string ta = a.substr(k), tb = b.substr(k);
  if (ta == tb) return false;
  for (const auto& suf : suffixes) {
    if (ta.size() >= suf.size() && ta.compare(ta.size() - suf.size(), suf.size(), suf) == 0) return true;
    if (tb.size() >= suf.size() && tb.compare(tb.size() - suf.size(), suf.size(), suf) == 0) return true;
  }
  return false;
}

inline ErrorCategory reference_classify(const std::string& input, const std::string& output,
                                        const LanguageProfile& profile) {
  const std::u32string a = unicode::decode_utf8(input);
  const std::u32string b = unicode::decode_utf8(output);

  if (oracle_nullish(a) || oracle_nullish(b)) return ErrorCategory::kNullEmpty;
  if (a == b) return ErrorCategory::kNoError;
  if (oracle_projection(a) == oracle_projection(b)) return ErrorCategory::kPunctWhitespace;

  const auto ta = oracle_tokens(a);
  const auto tb = oracle_tokens(b);
  std::vector<std::string> sa, sb, wa, wb;
  for (const auto& t : ta) {
    sa.push_back(unicode::encode_utf8(t.text));
    if (!t.punct) wa.push_back(sa.back());
  }
  for (const auto& t : tb) {
    sb.push_back(unicode::encode_utf8(t.text));
    if (!t.punct) wb.push_back(sb.back());
  }
  std::sort(wa.begin(), wa.end());
  std::sort(wb.begin(), wb.end());
  if (wa == wb && sa != sb) return ErrorCategory::kWordOrder;

  auto syntax_word = [&](const std::string& w) {
    return profile.auxiliaries().count(w) > 0 || profile.postpositions().count(w) > 0;
  };
  std::vector<std::u32string> suffixes;
  for (const auto& s : profile.suffixes()) suffixes.push_back(unicode::decode_utf8(s));

  bool ins_del = false, repl = false, syntax = false, morph = false, spell = false;
  for (const auto& op : difflib_opcodes(sa, sb)) {
    if (op.tag == "equal") continue;
    bool touched = false;
    for (std::size_t i = op.i1; i < op.i2; ++i) touched = touched || syntax_word(sa[i]);
    for (std::size_t j = op.j1; j < op.j2; ++j) touched = touched || syntax_word(sb[j]);
    if (op.tag == "insert" || op.tag == "delete") {
      ins_del = true;
      syntax = syntax || touched;
      continue;
    }
    repl = true;
    if (touched) {
      syntax = true;
      continue;
    }
    const std::size_t n = std::min(op.i2 - op.i1, op.j2 - op.j1);
    for (std::size_t k = 0; k < n; ++k) {
      const OracleToken& x = ta[op.i1 + k];
      const OracleToken& y = tb[op.j1 + k];
      const auto sx = letter_script(x), sy = letter_script(y);
      if (sx && sy && *sx == *sy && oracle_suffix_change(x.text, y.text, suffixes)) {
        morph = true;
      } else if (matrix_levenshtein(x.text, y.text) <= 2) {
        spell = true;
      }
    }
  }

  if (ins_del) return syntax ? ErrorCategory::kSyntaxAgreement : ErrorCategory::kMissingExtraWord;
  if (repl) {
    if (syntax) return ErrorCategory::kSyntaxAgreement;
    if (morph) return ErrorCategory::kMorphology;
    if (spell) return ErrorCategory::kSpelling;
  }
  return ErrorCategory::kGrammarSyntax;
}

}  // namespace gecforge::oracle
