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

// Seeded random generators for property and oracle tests.

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gecforge/profile.hpp"
#include "gecforge/unicode.hpp"

namespace gecforge::testgen {

using Rng = std::mt19937_64;

struct Alphabet {
  std::vector<std::u32string> consonants;
  std::vector<std::u32string> vowels;
  std::vector<std::u32string> signs;
  std::vector<std::u32string> digits;
  std::vector<std::u32string> punct;
  std::vector<std::u32string> latin;
};

inline const Alphabet& alphabet(Language lang) {
  static const Alphabet hi{
      {U"क", U"ख", U"ग", U"र", U"ल", U"स", U"न", U"म", U"त", U"ह", U"ड़"},
      {U"अ", U"आ", U"इ", U"उ"},
      {U"ा", U"ि", U"ी", U"े", U"ो", U"ं", U"्", U"ों", U"ें"},
      {U"०", U"१", U"२", U"७", U"1", U"2", U"9"},
      {U".", U",", U"।", U"?", U"!", U"॥", U";", U"-"},
      {U"a", U"b", U"k", U"x"},
  };
  static const Alphabet ml{
      {U"ക", U"ച", U"ത", U"ന", U"മ", U"യ", U"ര", U"ല", U"വ", U"ട"},
      {U"അ", U"ആ", U"ഇ", U"ഉ"},
      {U"ാ", U"ി", U"ു", U"െ", U"്", U"ം", U"ൽ", U"ൻ"},
      {U"൦", U"൧", U"൨", U"1", U"5"},
      {U".", U",", U"?", U"!", U";", U"-"},
      {U"a", U"m", U"z"},
  };
  return lang == Language::kHindi ? hi : ml;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

inline bool coin(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::u32string random_word(Rng& rng, Language lang) {
  const Alphabet& a = alphabet(lang);
  std::u32string w = coin(rng, 0.15) ? pick(rng, a.vowels) : pick(rng, a.consonants);
  const int syll = uniform(rng, 0, 3);
  for (int i = 0; i < syll; ++i) {
    if (coin(rng, 0.5)) w += pick(rng, a.signs);
    w += pick(rng, a.consonants);
  }
  if (coin(rng, 0.5)) w += pick(rng, a.signs);
  return w;
}

inline std::vector<std::u32string> lexicon_words(const LanguageProfile& p) {
  std::vector<std::u32string> out;
  for (const auto& w : p.auxiliaries()) out.push_back(unicode::decode_utf8(w));
  for (const auto& w : p.postpositions()) out.push_back(unicode::decode_utf8(w));
  return out;
}

inline std::u32string random_token(Rng& rng, const LanguageProfile& p) {
  const Alphabet& a = alphabet(p.language());
  const int r = uniform(rng, 0, 99);
  if (r < 55) return random_word(rng, p.language());
  if (r < 75) return pick(rng, lexicon_words(p));
  if (r < 85) {
    std::u32string d;
    for (int i = uniform(rng, 1, 3); i > 0; --i) d += pick(rng, a.digits);
    return d;
  }
  if (r < 92) return pick(rng, a.latin) + pick(rng, a.latin);
  return pick(rng, a.punct);
}

inline std::vector<std::u32string> random_tokens(Rng& rng, const LanguageProfile& p) {
  std::vector<std::u32string> out;
  for (int i = uniform(rng, 1, 8); i > 0; --i) out.push_back(random_token(rng, p));
  return out;
}

inline std::u32string join_tokens(Rng& rng, const std::vector<std::u32string>& toks,
                                  const Alphabet& a) {
  std::u32string s;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i > 0) s += coin(rng, 0.08) ? U"  " : U" ";
    s += toks[i];
  }
  if (coin(rng, 0.6)) s += (coin(rng, 0.5) ? U" " : U"") + pick(rng, a.punct);
  return s;
}

inline void mutate_chars(Rng& rng, std::u32string& w, Language lang) {
  const Alphabet& a = alphabet(lang);
  const int edits = uniform(rng, 1, 3);
  for (int e = 0; e < edits; ++e) {
    const int kind = uniform(rng, 0, 2);
    const std::u32string piece = coin(rng, 0.5) ? pick(rng, a.consonants) : pick(rng, a.signs);
    const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
    if (kind == 0 || w.empty()) {
      w.insert(pos, piece);
    } else if (kind == 1 && pos < w.size()) {
      w.erase(pos, 1);
    } else if (pos < w.size()) {
      w.replace(pos, 1, piece);
    }
  }
}

/// True when NFKC leaves the text unchanged both as-is and with
/// invisible characters removed.
inline bool nfkc_stable(const std::string& s) {
  const std::u32string u = unicode::decode_utf8(s);
  std::u32string visible;
  for (char32_t cp : u) {
    if (cp != 0x200B && cp != 0x200C && cp != 0x200D && cp != 0xFEFF && cp != 0x00AD &&
        cp != 0x200E && cp != 0x200F) {
      visible.push_back(cp);
    }
  }
  return unicode::nfkc(std::u32string_view(u)) == u &&
         unicode::nfkc(std::u32string_view(visible)) == visible;
}

/// A (input, output) pair drawn to exercise every classifier branch.
inline std::pair<std::string, std::string> random_pair(Rng& rng, const LanguageProfile& p) {
  const Language lang = p.language();
  const Alphabet& a = alphabet(lang);
  auto toks = random_tokens(rng, p);
  const std::u32string in = join_tokens(rng, toks, a);
  const int mode = uniform(rng, 0, 11);
  std::u32string out;
  switch (mode) {
    case 0: {  // null-ish cell
      static const std::vector<std::u32string> nulls = {U"", U"  ", U"nan", U"NULL", U" None "};
      out = pick(rng, nulls);
      if (coin(rng, 0.5)) return {unicode::encode_utf8(out), unicode::encode_utf8(in)};
      break;
    }
    case 1:
      out = in;
      break;
    case 2: {  // spacing / punctuation / invisibles only
      out = in;
      const int k = uniform(rng, 1, 3);
      for (int e = 0; e < k; ++e) {
        const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, out.size())(rng);
        const int which = uniform(rng, 0, 3);
        if (which == 0) out.insert(pos, U" ");
        if (which == 1) out.insert(pos, pick(rng, a.punct));
        if (which == 2) out.insert(pos, coin(rng, 0.5) ? U"\u200B" : U"\u200D");
        if (which == 3 && pos < out.size() && out[pos] == U' ') out.erase(pos, 1);
      }
      break;
    }
    case 3:
      if (toks.size() >= 2) std::shuffle(toks.begin(), toks.end(), rng);
      out = join_tokens(rng, toks, a);
      break;
    case 4: {  // insert a token
      const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, toks.size())(rng);
      toks.insert(toks.begin() + pos, random_token(rng, p));
      out = join_tokens(rng, toks, a);
      break;
    }
    case 5: {  // delete a token
      if (toks.size() > 1) toks.erase(toks.begin() + uniform(rng, 0, static_cast<int>(toks.size()) - 1));
      out = join_tokens(rng, toks, a);
      break;
    }
    case 6:
    case 7: {  // suffix swap on one word
      auto& w = toks[uniform(rng, 0, static_cast<int>(toks.size()) - 1)];
      const auto& sufs = p.suffixes();
      const std::u32string suf = unicode::decode_utf8(pick(rng, sufs));
      if (coin(rng, 0.5) && w.size() > 1) w.pop_back();
      w += suf;
      out = join_tokens(rng, toks, a);
      break;
    }
    case 8:
    case 9: {  // character-level edits on one or two words
      for (int k = uniform(rng, 1, 2); k > 0; --k) {
        mutate_chars(rng, toks[uniform(rng, 0, static_cast<int>(toks.size()) - 1)], lang);
      }
      out = join_tokens(rng, toks, a);
      break;
    }
    case 10: {  // replace a word wholesale
      toks[uniform(rng, 0, static_cast<int>(toks.size()) - 1)] = random_word(rng, lang);
      out = join_tokens(rng, toks, a);
      break;
    }
    default:
      out = join_tokens(rng, random_tokens(rng, p), a);
      break;
  }
  return {unicode::encode_utf8(in), unicode::encode_utf8(out)};
}

/// Random text for normalizer properties: mixes scripts, native digits,
/// dandas, stray spaces, tabs and invisible characters.
inline std::string random_messy_text(Rng& rng, const LanguageProfile& p) {
  const Alphabet& a = alphabet(p.language());
  static const std::vector<std::u32string> noise = {
      U" ", U"  ", U"\t", U"\u200B", U"\u200C", U"\u200D", U"\uFEFF", U"\u00AD",
      U"\u00A0", U"\uFB01", U"\uFF11", U"।", U"॥", U"..", U" ।", U"?!", U"\u3000"};
  std::u32string s;
  for (int i = uniform(rng, 0, 12); i > 0; --i) {
    const int r = uniform(rng, 0, 9);
    if (r < 5) {
      s += random_token(rng, p);
    } else if (r < 8) {
      s += pick(rng, noise);
    } else {
      s += pick(rng, a.punct);
    }
  }
  return unicode::encode_utf8(s);
}

}  // namespace gecforge::testgen
