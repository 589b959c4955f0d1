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

#include "gecforge/prompt.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>

#include "embedded_data.hpp"
#include "gecforge/error.hpp"

namespace gecforge {

namespace {

std::string_view guidance(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kPunctWhitespace:
      return "fix spacing and punctuation marks, including the sentence-final mark";
    case ErrorCategory::kWordOrder:
      return "restore word order only where it is ungrammatical";
    case ErrorCategory::kMissingExtraWord:
      return "restore dropped function words and remove accidental repetitions";
    case ErrorCategory::kSyntaxAgreement:
      return "correct auxiliaries, case markers and agreement";
    case ErrorCategory::kMorphology:
      return "repair inflectional suffixes (case, tense, aspect, mood)";
    case ErrorCategory::kSpelling:
      return "fix small spelling and diacritic slips";
    case ErrorCategory::kGrammarSyntax:
      return "fix remaining local grammatical errors";
    default:
      return "";
  }
}

std::string_view deprioritized_text(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kWordOrder: return "reordering words";
    case ErrorCategory::kMissingExtraWord: return "deleting or adding words";
    default: return "";
  }
}

void replace_all(std::string& s, std::string_view what, std::string_view with) {
  std::size_t pos = 0;
  while ((pos = s.find(what, pos)) != std::string::npos) {
    s.replace(pos, what.size(), with);
    pos += with.size();
  }
}

}  // namespace

std::string_view prompt_template() { return embedded::kPromptTemplate; }

PromptSpec synthesize_prompt(const DistributionReport& report,
                             const LanguageProfile& profile) {
  if (report.total == 0) {
    throw InputError("cannot synthesize a prompt from an empty distribution");
  }
  PromptSpec spec;
  spec.lang = profile.language();

  for (ErrorCategory c : kAllCategories) {
    if (c == ErrorCategory::kNullEmpty || c == ErrorCategory::kNoError) continue;
    if (report.count(c) > 0) spec.prioritized.push_back(c);
  }
  std::stable_sort(spec.prioritized.begin(), spec.prioritized.end(),
                   [&](ErrorCategory a, ErrorCategory b) {
                     return report.count(a) > report.count(b);
                   });
  constexpr std::array kPromoted = {ErrorCategory::kPunctWhitespace,
                                    ErrorCategory::kMorphology};
  std::stable_partition(spec.prioritized.begin(), spec.prioritized.end(),
                        [&](ErrorCategory c) {
                          return std::find(kPromoted.begin(), kPromoted.end(),
                                           c) != kPromoted.end();
                        });
  // Both promoted categories keep Punctuation/Whitespace first.
  if (spec.prioritized.size() >= 2 &&
      spec.prioritized[0] == ErrorCategory::kMorphology &&
      spec.prioritized[1] == ErrorCategory::kPunctWhitespace) {
    std::swap(spec.prioritized[0], spec.prioritized[1]);
  }

  spec.deprioritized = {ErrorCategory::kWordOrder, ErrorCategory::kMissingExtraWord};

  spec.constraints = {
      "Make the fewest possible changes needed to make the sentence grammatical.",
      "Do not paraphrase, rephrase or translate; keep every correct word as written.",
      "Preserve numerals and named entities exactly.",
      profile.language() == Language::kHindi
          ? "End the sentence with the appropriate sentence-final mark (danda । or question mark)."
          : "End the sentence with the appropriate sentence-final mark (full stop or question mark).",
  };
  spec.rendered = render_prompt(spec);
  return spec;
}

std::string render_prompt(const PromptSpec& spec) {
  const LanguageProfile& profile = LanguageProfile::builtin(spec.lang);

  std::string prioritized;
  if (spec.prioritized.empty()) {
    prioritized = "- (no dominant error type; apply the constraints below)\n";
  }
  for (std::size_t i = 0; i < spec.prioritized.size(); ++i) {
    const ErrorCategory c = spec.prioritized[i];
    prioritized += std::to_string(i + 1) + ". " + category_label(c, profile) +
                   ": " + std::string(guidance(c)) + "\n";
  }
  std::string deprioritized;
  for (ErrorCategory c : spec.deprioritized) {
    deprioritized += "- " + std::string(deprioritized_text(c)) + " (" +
                     category_label(c, profile) + ")\n";
  }
  std::string constraints;
  for (const auto& clause : spec.constraints) constraints += "- " + clause + "\n";
  auto chomp = [](std::string& s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
  };
  chomp(prioritized);
  chomp(deprioritized);
  chomp(constraints);

  std::string out;
  std::string_view tmpl = prompt_template();
  while (!tmpl.empty()) {
    auto nl = tmpl.find('\n');
    const std::string_view line = tmpl.substr(0, nl);
    tmpl.remove_prefix(nl == std::string_view::npos ? tmpl.size() : nl + 1);
    if (line.starts_with('#')) continue;
    out.append(line);
    out.push_back('\n');
  }
  replace_all(out, "{{language}}",
              spec.lang == Language::kHindi ? "Hindi" : "Malayalam");
  replace_all(out, "{{prioritized}}", prioritized);
  replace_all(out, "{{deprioritized}}", deprioritized);
  replace_all(out, "{{constraints}}", constraints);
  return out;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0x0F]);
  }
  return out;
}

}  // namespace gecforge
