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

#include "gecforge/profile.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "embedded_data.hpp"
#include "gecforge/error.hpp"
#include "gecforge/unicode.hpp"

namespace gecforge {

namespace {

constexpr CodepointRange kDevanagari[] = {{0x0900, 0x097F}, {0xA8E0, 0xA8FF}};
constexpr CodepointRange kMalayalam[] = {{0x0D00, 0x0D7F}};
constexpr CodepointRange kLatin[] = {
    {0x0041, 0x005A}, {0x0061, 0x007A}, {0x00C0, 0x024F}, {0x1E00, 0x1EFF}};

template <std::size_t N>
bool any_contains(const CodepointRange (&ranges)[N], char32_t cp) {
  return std::any_of(std::begin(ranges), std::end(ranges),
                     [cp](const CodepointRange& r) { return r.contains(cp); });
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::size_t codepoint_count(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(),
      [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

}  // namespace

std::string_view language_code(Language lang) {
  return lang == Language::kHindi ? "hi" : "ml";
}

Language parse_language(std::string_view code) {
  if (code == "hi") return Language::kHindi;
  if (code == "ml") return Language::kMalayalam;
  throw InputError("unknown language '" + std::string(code) +
                   "' (expected hi or ml)");
}

std::string_view script_name(Script script) {
  switch (script) {
    case Script::kDevanagari: return "devanagari";
    case Script::kMalayalam: return "malayalam";
    case Script::kLatin: return "latin";
    case Script::kOther: return "other";
  }
  return "other";
}

Script script_of(char32_t cp) {
  if (any_contains(kDevanagari, cp)) return Script::kDevanagari;
  if (any_contains(kMalayalam, cp)) return Script::kMalayalam;
  if (any_contains(kLatin, cp)) return Script::kLatin;
  return Script::kOther;
}

Lexicon parse_lexicon(std::string_view text) {
  Lexicon lex;
  std::vector<std::string>* section = nullptr;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      const auto name = line.substr(1, line.size() - 2);
      if (name == "auxiliaries") {
        section = &lex.auxiliaries;
      } else if (name == "postpositions") {
        section = &lex.postpositions;
      } else if (name == "suffixes") {
        section = &lex.suffixes;
      } else {
        throw SchemaError("lexicon line " + std::to_string(line_no) +
                          ": unknown section [" + std::string(name) + "]");
      }
      continue;
    }
    if (section == nullptr) {
      throw SchemaError("lexicon line " + std::to_string(line_no) +
                        ": entry outside of a section");
    }
    // Validates encoding before the entry is accepted.
    section->push_back(unicode::nfkc(line));
  }
  return lex;
}

Lexicon load_lexicon_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open lexicon file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_lexicon(buf.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

std::string_view default_lexicon_text(Language lang) {
  return lang == Language::kHindi ? embedded::kLexiconHi
                                  : embedded::kLexiconMl;
}

LanguageProfile LanguageProfile::from_lexicon(Language lang,
                                              const Lexicon& lexicon) {
  LanguageProfile p;
  p.language_ = lang;
  if (lang == Language::kHindi) {
    p.script_ranges_.assign(std::begin(kDevanagari), std::end(kDevanagari));
    p.primary_script_ = Script::kDevanagari;
    p.digit_range_ = {0x0966, 0x096F};
    p.syntax_label_ = "Syntax/Case/Agreement";
    p.default_terminal_ = U'।';
  } else {
    p.script_ranges_.assign(std::begin(kMalayalam), std::end(kMalayalam));
    p.primary_script_ = Script::kMalayalam;
    p.digit_range_ = {0x0D66, 0x0D6F};
    p.syntax_label_ = "Syntax/Agreement";
    p.default_terminal_ = U'.';
    if (!lexicon.postpositions.empty()) {
      throw SchemaError(
          "Malayalam lexicon must not define postpositions (case is "
          "suffixal)");
    }
  }
  auto normalized = [](const std::string& s) { return unicode::nfkc(s); };
  for (const auto& a : lexicon.auxiliaries) p.auxiliaries_.insert(normalized(a));
  for (const auto& a : lexicon.postpositions) {
    p.postpositions_.insert(normalized(a));
  }
  std::vector<std::string> suffixes;
  for (const auto& s : lexicon.suffixes) suffixes.push_back(normalized(s));
  std::sort(suffixes.begin(), suffixes.end(),
            [](const std::string& a, const std::string& b) {
              const auto la = codepoint_count(a);
              const auto lb = codepoint_count(b);
              return la != lb ? la > lb : a < b;
            });
  suffixes.erase(std::unique(suffixes.begin(), suffixes.end()),
                 suffixes.end());
  p.suffixes_ = std::move(suffixes);
  return p;
}

const LanguageProfile& LanguageProfile::builtin(Language lang) {
  static const LanguageProfile hi = from_lexicon(
      Language::kHindi, parse_lexicon(default_lexicon_text(Language::kHindi)));
  static const LanguageProfile ml =
      from_lexicon(Language::kMalayalam,
                   parse_lexicon(default_lexicon_text(Language::kMalayalam)));
  return lang == Language::kHindi ? hi : ml;
}

bool LanguageProfile::in_script(char32_t cp) const {
  return std::any_of(script_ranges_.begin(), script_ranges_.end(),
                     [cp](const CodepointRange& r) { return r.contains(cp); });
}

LanguageProfile resolve_profile(Language lang,
                                const std::filesystem::path* lexicon_path) {
  if (lexicon_path != nullptr && !lexicon_path->empty()) {
    return LanguageProfile::from_lexicon(lang,
                                         load_lexicon_file(*lexicon_path));
  }
  if (const char* env = std::getenv("GEC_FORGE_LEXICON");
      env != nullptr && *env != '\0') {
    return LanguageProfile::from_lexicon(lang, load_lexicon_file(env));
  }
  return LanguageProfile::builtin(lang);
}

}  // namespace gecforge
