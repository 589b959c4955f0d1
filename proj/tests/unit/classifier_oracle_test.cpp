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


#include <gtest/gtest.h>

#include <random>

#include "classifier_fixtures.hpp"
#include "gecforge/classifier.hpp"
#include "generators.hpp"
#include "reference_classifier.hpp"

namespace gecforge {
namespace {

TEST(ClassifierOracle, OracleAlphabetAgreesWithIcu) {
  for (Language lang : {Language::kHindi, Language::kMalayalam}) {
    const auto& a = testgen::alphabet(lang);
    for (const auto* group : {&a.consonants, &a.vowels, &a.signs, &a.digits, &a.punct, &a.latin}) {
      for (const auto& piece : *group) {
        for (char32_t cp : piece) {
          const auto ci = oracle::char_info(cp);
          EXPECT_EQ(ci.kind == oracle::CharKind::kLetter, unicode::is_letter(cp)) << std::hex << static_cast<std::uint32_t>(cp);
          EXPECT_EQ(ci.kind == oracle::CharKind::kMark, unicode::is_mark(cp)) << std::hex << static_cast<std::uint32_t>(cp);
          EXPECT_EQ(ci.kind == oracle::CharKind::kDigit, unicode::is_decimal_digit(cp))
              << std::hex << static_cast<std::uint32_t>(cp);
        }
      }
    }
  }
}

TEST(ClassifierOracle, ReferenceAgreesWithHandLabels) {
  for (const auto* set : {&fixtures::category_fixtures(), &fixtures::conflict_fixtures(),
                          &fixtures::threshold_fixtures()}) {
    for (const auto& f : *set) {
      if (!testgen::nfkc_stable(std::string(f.input)) ||
          !testgen::nfkc_stable(std::string(f.output))) {
        continue;
      }
      const auto got = oracle::reference_classify(std::string(f.input), std::string(f.output),
                                                  LanguageProfile::builtin(f.lang));
      EXPECT_EQ(category_key(got), category_key(f.expected)) << f.note;
    }
  }
}

TEST(ClassifierOracle, RandomPairsAgree) {
  testgen::Rng rng(20261019);
  std::array<int, kCategoryCount> seen{};
  int compared = 0;
  while (compared < 1000) {
    const Language lang = compared % 2 == 0 ? Language::kHindi : Language::kMalayalam;
    const auto& profile = LanguageProfile::builtin(lang);
    const auto [in, out] = testgen::random_pair(rng, profile);
    if (!testgen::nfkc_stable(in) || !testgen::nfkc_stable(out)) continue;
    const ErrorCategory want = oracle::reference_classify(in, out, profile);
    const ErrorCategory got = classify_pair(in, out, profile).category;
    ASSERT_EQ(category_key(got), category_key(want)) << "[" << in << "] -> [" << out << "]";
    ++seen[category_index(got)];
    ++compared;
  }
  for (ErrorCategory c : kAllCategories) EXPECT_GT(seen[category_index(c)], 0) << category_key(c);
}

}  // namespace
}  // namespace gecforge
