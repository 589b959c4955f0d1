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

#include "gecforge/alignment.hpp"

#include "gecforge/unicode.hpp"

namespace gecforge {

std::string_view to_string(OpTag tag) {
  switch (tag) {
    case OpTag::kEqual: return "equal";
    case OpTag::kInsert: return "insert";
    case OpTag::kDelete: return "delete";
    case OpTag::kReplace: return "replace";
  }
  return "equal";
}

EditScript align(std::span<const std::string> a, std::span<const std::string> b) {
  return align_sequences(a, b);
}

EditScript align(const std::vector<Token>& a, const std::vector<Token>& b) {
  const auto ta = token_texts(a);
  const auto tb = token_texts(b);
  return align(std::span<const std::string>(ta), std::span<const std::string>(tb));
}

std::vector<std::string> apply_edit_script(std::span<const std::string> a,
                                           std::span<const std::string> b,
                                           const EditScript& script) {
  std::vector<std::string> out;
  for (const auto& op : script.ops) {
    switch (op.tag) {
      case OpTag::kEqual:
        out.insert(out.end(), a.begin() + op.a_begin, a.begin() + op.a_end);
        break;
      case OpTag::kInsert:
      case OpTag::kReplace:
        out.insert(out.end(), b.begin() + op.b_begin, b.begin() + op.b_end);
        break;
      case OpTag::kDelete:
        break;
    }
  }
  return out;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  const std::u32string ua = unicode::decode_utf8(a);
  const std::u32string ub = unicode::decode_utf8(b);
  return levenshtein_sequence(std::span<const char32_t>(ua),
                              std::span<const char32_t>(ub));
}

bool suffix_tail_change(std::string_view a, std::string_view b,
                        std::span<const std::string> suffixes) {
  const std::u32string ua = unicode::decode_utf8(a);
  const std::u32string ub = unicode::decode_utf8(b);
  std::size_t k = 0;
  while (k < ua.size() && k < ub.size() && ua[k] == ub[k]) ++k;
  const std::u32string_view ta = std::u32string_view(ua).substr(k);
  const std::u32string_view tb = std::u32string_view(ub).substr(k);
  if (ta == tb) return false;
  for (const auto& suffix : suffixes) {
    const std::u32string us = unicode::decode_utf8(suffix);
    if (ta.ends_with(us) || tb.ends_with(us)) return true;
  }
  return false;
}

bool touches_syntax(std::span<const std::string> segment,
                    const LanguageProfile& profile) {
  return std::any_of(segment.begin(), segment.end(), [&](const std::string& t) {
    return profile.is_syntax_word(t);
  });
}

bool touches_syntax(std::span<const Token> segment,
                    const LanguageProfile& profile) {
  return std::any_of(segment.begin(), segment.end(), [&](const Token& t) {
    return profile.is_syntax_word(t.text);
  });
}

}  // namespace gecforge
