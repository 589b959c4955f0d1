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

#include "gecforge/classifier.hpp"

#include <algorithm>
#include <cctype>

#include "gecforge/textnorm.hpp"
#include "gecforge/tokenizer.hpp"
#include "gecforge/unicode.hpp"

namespace gecforge {

namespace {

std::vector<std::string> sorted_nonpunct(const std::vector<Token>& tokens,
                                         const LanguageProfile& profile) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (!is_punct(t, profile)) out.push_back(t.text);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Classification with_stage(ErrorCategory c, Stage stage) {
  Classification result{c, {}};
  result.evidence.stage = stage;
  return result;
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kNullEmpty: return "null_empty";
    case Stage::kNoError: return "no_error";
    case Stage::kPunctProjection: return "punct_projection";
    case Stage::kWordOrder: return "word_order";
    case Stage::kAlignment: return "alignment";
    case Stage::kFallback: return "fallback";
  }
  return "fallback";
}

bool nullish(std::string_view s) {
  const std::u32string text = unicode::decode_utf8(s);
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && unicode::is_white_space(text[b])) ++b;
  while (e > b && unicode::is_white_space(text[e - 1])) --e;
  if (b == e) return true;
  if (e - b > 4) return false;
  std::string lowered;
  for (std::size_t i = b; i < e; ++i) {
    if (text[i] >= 0x80) return false;
    lowered.push_back(static_cast<char>(std::tolower(static_cast<int>(text[i]))));
  }
  return lowered == "nan" || lowered == "null" || lowered == "none";
}

Classification classify_pair(std::string_view input, std::string_view output,
                             const LanguageProfile& profile) {
  if (nullish(input) || nullish(output)) {
    return with_stage(ErrorCategory::kNullEmpty, Stage::kNullEmpty);
  }
  if (input == output) return with_stage(ErrorCategory::kNoError, Stage::kNoError);
  if (alnum_projection(input, profile) == alnum_projection(output, profile)) {
    return with_stage(ErrorCategory::kPunctWhitespace, Stage::kPunctProjection);
  }

  const NormalizationPolicy view = comparison_policy();
  const std::vector<Token> a = tokenize(normalize_text(input, view), profile);
  const std::vector<Token> b = tokenize(normalize_text(output, view), profile);
  const std::vector<std::string> ta = token_texts(a);
  const std::vector<std::string> tb = token_texts(b);

  if (sorted_nonpunct(a, profile) == sorted_nonpunct(b, profile) && ta != tb) {
    return with_stage(ErrorCategory::kWordOrder, Stage::kWordOrder);
  }

  Classification result{ErrorCategory::kGrammarSyntax, {}};
  Evidence& ev = result.evidence;
  ev.ops = align(std::span<const std::string>(ta), std::span<const std::string>(tb)).ops;
  ev.input_tokens = ta;
  ev.output_tokens = tb;

  auto note_syntax = [&](std::span<const Token> seg) {
    for (const auto& t : seg) {
      if (profile.is_syntax_word(t.text)) {
        if (!ev.syntax_hit) ev.syntax_hit = t.text;
        return true;
      }
    }
    return false;
  };

  const std::span<const Token> sa(a);
  const std::span<const Token> sb(b);
  for (const Opcode& op : ev.ops) {
    const auto seg_a = sa.subspan(op.a_begin, op.a_end - op.a_begin);
    const auto seg_b = sb.subspan(op.b_begin, op.b_end - op.b_begin);
    if (op.tag == OpTag::kInsert || op.tag == OpTag::kDelete) {
      if (note_syntax(seg_a) || note_syntax(seg_b)) ev.touched_syntax = true;
      ev.saw_insert_delete = true;
    } else if (op.tag == OpTag::kReplace) {
      ev.saw_replace = true;
      if (note_syntax(seg_a) || note_syntax(seg_b)) {
        ev.touched_syntax = true;
        continue;
      }
      // Pairwise over the shorter segment; overhang tokens are not compared.
      const std::size_t n = std::min(seg_a.size(), seg_b.size());
      for (std::size_t k = 0; k < n; ++k) {
        const Token& x = seg_a[k];
        const Token& y = seg_b[k];
        if (same_script(x, y, profile) &&
            suffix_tail_change(x.text, y.text, profile.suffixes())) {
          ev.saw_morphology = true;
          if (!ev.morphology_pair) ev.morphology_pair.emplace(x.text, y.text);
        } else if (levenshtein(x.text, y.text) <= kSpellThreshold) {
          ev.saw_spelling = true;
          if (!ev.spelling_pair) ev.spelling_pair.emplace(x.text, y.text);
        }
      }
    }
  }

  ev.stage = Stage::kAlignment;
  if (ev.saw_insert_delete) {
    result.category = ev.touched_syntax ? ErrorCategory::kSyntaxAgreement
                                        : ErrorCategory::kMissingExtraWord;
  } else if (ev.saw_replace) {
    if (ev.touched_syntax) {
      result.category = ErrorCategory::kSyntaxAgreement;
    } else if (ev.saw_morphology) {
      result.category = ErrorCategory::kMorphology;
    } else if (ev.saw_spelling) {
      result.category = ErrorCategory::kSpelling;
    } else {
      result.category = ErrorCategory::kGrammarSyntax;
    }
  } else {
    ev.stage = Stage::kFallback;
    result.category = ErrorCategory::kGrammarSyntax;
  }
  return result;
}

}  // namespace gecforge
