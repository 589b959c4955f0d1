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

#include "gecforge/textnorm.hpp"

#include <algorithm>

#include "gecforge/error.hpp"
#include "gecforge/unicode.hpp"

namespace gecforge {

namespace {

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  throw InputError("invalid boolean for '" + key + "': '" + value + "'");
}

bool is_mid_mark(char32_t cp) { return cp == U',' || cp == U';' || cp == U':'; }

bool is_closing(char32_t cp) {
  switch (cp) {
    case U')': case U']': case U'}': case U'"': case U'\'':
    case U'”': case U'’': case U'»':
      return true;
    default:
      return false;
  }
}

std::u32string collapse_whitespace(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (char32_t cp : in) {
    if (unicode::is_white_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(cp);
  }
  return out;
}

// Collapses every run of terminal marks (whitespace allowed between members)
// to its last member. Whitespace in front of the run is left alone.
std::u32string unify_terminal_runs(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (!is_terminal_mark(in[i])) {
      out.push_back(in[i++]);
      continue;
    }
    char32_t last = in[i];
    std::size_t j = i + 1;
    while (true) {
      std::size_t k = j;
      while (k < in.size() && unicode::is_white_space(in[k])) ++k;
      if (k < in.size() && is_terminal_mark(in[k])) {
        last = in[k];
        j = k + 1;
      } else {
        break;
      }
    }
    out.push_back(last);
    i = j;
  }
  return out;
}

}  // namespace

std::string_view to_string(DandaPolicy policy) {
  switch (policy) {
    case DandaPolicy::kKeepDanda: return "keep_danda";
    case DandaPolicy::kMapDandaToPeriod: return "map_danda_to_period";
    case DandaPolicy::kMapPeriodToDanda: return "map_period_to_danda";
  }
  return "keep_danda";
}

std::string_view to_string(DigitPolicy policy) {
  return policy == DigitPolicy::kToAscii ? "to_ascii" : "keep_native";
}

DandaPolicy parse_danda_policy(std::string_view s) {
  if (s == "keep_danda") return DandaPolicy::kKeepDanda;
  if (s == "map_danda_to_period") return DandaPolicy::kMapDandaToPeriod;
  if (s == "map_period_to_danda") return DandaPolicy::kMapPeriodToDanda;
  throw InputError("unknown danda policy '" + std::string(s) + "'");
}

DigitPolicy parse_digit_policy(std::string_view s) {
  if (s == "to_ascii") return DigitPolicy::kToAscii;
  if (s == "keep_native") return DigitPolicy::kKeepNative;
  throw InputError("unknown digit policy '" + std::string(s) + "'");
}

void NormalizationPolicy::apply(
    const std::map<std::string, std::string>& settings) {
  for (const auto& [key, value] : settings) {
    if (key == "strip_invisibles") {
      strip_invisibles = parse_bool(key, value);
    } else if (key == "strip_joiners") {
      strip_joiners = parse_bool(key, value);
    } else if (key == "collapse_whitespace") {
      collapse_whitespace = parse_bool(key, value);
    } else if (key == "unify_terminal_punct") {
      unify_terminal_punct = parse_bool(key, value);
    } else if (key == "danda_policy") {
      danda = parse_danda_policy(value);
    } else if (key == "digit_policy") {
      digits = parse_digit_policy(value);
    }
  }
}

NormalizationPolicy comparison_policy() {
  NormalizationPolicy p;
  p.strip_invisibles = true;
  p.strip_joiners = true;
  p.collapse_whitespace = true;
  p.unify_terminal_punct = false;
  p.danda = DandaPolicy::kKeepDanda;
  p.digits = DigitPolicy::kToAscii;
  return p;
}

bool is_joiner(char32_t cp) {
  return cp == unicode::kZeroWidthJoiner || cp == unicode::kZeroWidthNonJoiner;
}

bool is_invisible(char32_t cp) {
  switch (cp) {
    case 0x200B: case 0x200C: case 0x200D: case 0xFEFF:
    case 0x00AD: case 0x200E: case 0x200F:
      return true;
    default:
      return false;
  }
}

bool is_native_digit(char32_t cp) {
  return (cp >= 0x0966 && cp <= 0x096F) || (cp >= 0x0D66 && cp <= 0x0D6F);
}

char32_t native_digit_to_ascii(char32_t cp) {
  if (cp >= 0x0966 && cp <= 0x096F) return U'0' + (cp - 0x0966);
  if (cp >= 0x0D66 && cp <= 0x0D6F) return U'0' + (cp - 0x0D66);
  return cp;
}

bool is_terminal_mark(char32_t cp) {
  return cp == U'.' || cp == U'।' || cp == U'?' || cp == U'!';
}

std::string normalize_text(std::string_view s,
                           const NormalizationPolicy& policy) {
  std::u32string text = unicode::decode_utf8(s);

  // strip before NFKC
  if (policy.strip_invisibles) {
    std::erase_if(text, [&](char32_t cp) {
      return is_invisible(cp) && (policy.strip_joiners || !is_joiner(cp));
    });
  }
  text = unicode::nfkc(text);

  if (policy.digits == DigitPolicy::kToAscii) {
    std::transform(text.begin(), text.end(), text.begin(),
                   native_digit_to_ascii);
  }

  if (policy.danda == DandaPolicy::kMapDandaToPeriod) {
    std::replace_if(
        text.begin(), text.end(),
        [](char32_t cp) { return cp == U'।' || cp == U'॥'; }, U'.');
  } else if (policy.danda == DandaPolicy::kMapPeriodToDanda) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != U'.') continue;
      const bool decimal = i > 0 && i + 1 < text.size() &&
                           unicode::is_decimal_digit(text[i - 1]) &&
                           unicode::is_decimal_digit(text[i + 1]);
      if (!decimal) text[i] = U'।';
    }
  }

  if (policy.collapse_whitespace) text = collapse_whitespace(text);
  if (policy.unify_terminal_punct) text = unify_terminal_runs(text);
  return unicode::encode_utf8(text);
}

std::string alnum_projection(std::string_view s, const LanguageProfile&) {
  const std::u32string text = unicode::nfkc(unicode::decode_utf8(s));
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : text) {
    if (unicode::is_alnum(cp)) {
      unicode::append_utf8(out, native_digit_to_ascii(cp));
    }
  }
  return out;
}

std::string strip_prompt_echo(std::string_view s,
                              std::optional<std::string_view> prompt_prefix) {
  if (!prompt_prefix || prompt_prefix->empty()) return std::string(s);
  std::u32string text = unicode::decode_utf8(s);
  const std::u32string prefix = unicode::decode_utf8(*prompt_prefix);
  std::size_t pos = 0;
  while (true) {
    std::size_t p = pos;
    while (p < text.size() && unicode::is_white_space(text[p])) ++p;
    if (text.compare(p, prefix.size(), prefix) != 0) break;
    pos = p + prefix.size();
  }
  return unicode::encode_utf8(std::u32string_view(text).substr(pos));
}

std::string postprocess_hypothesis(std::string_view s,
                                   std::optional<std::string_view> prompt_prefix,
                                   const LanguageProfile& profile) {
  std::u32string text =
      collapse_whitespace(unicode::decode_utf8(strip_prompt_echo(s, prompt_prefix)));
  text = unify_terminal_runs(text);

  // Punctuation spacing: no space before . । ? ! , ; : and exactly one space
  // after a mid-sentence mark (or a non-period terminal) that is followed
  // by a word. Digit-mark-digit sequences (3,000 / 10:30) are left alone.
  std::u32string out;
  out.reserve(text.size() + 2);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char32_t cp = text[i];
    if (cp == U' ' && i + 1 < text.size() &&
        (is_terminal_mark(text[i + 1]) || is_mid_mark(text[i + 1]))) {
      continue;
    }
    out.push_back(cp);
    const bool spaced_mark =
        is_mid_mark(cp) || (is_terminal_mark(cp) && cp != U'.');
    if (spaced_mark && i + 1 < text.size() && unicode::is_alnum(text[i + 1])) {
      const bool numeric = !out.empty() && out.size() >= 2 &&
                           unicode::is_decimal_digit(out[out.size() - 2]) &&
                           unicode::is_decimal_digit(text[i + 1]);
      if (!numeric) out.push_back(U' ');
    }
  }

  // Trailing mid marks give way to the sentence-final mark.
  while (!out.empty() && (is_mid_mark(out.back()) || out.back() == U' ')) {
    out.pop_back();
  }
  if (out.empty()) return {};
  std::size_t end = out.size();
  while (end > 0 && is_closing(out[end - 1])) --end;
  if (end == 0 || !is_terminal_mark(out[end - 1])) {
    out.push_back(profile.default_terminal());
  }
  return unicode::encode_utf8(out);
}

}  // namespace gecforge
