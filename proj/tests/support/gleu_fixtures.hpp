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

// Frozen GLEU values computed by tests/oracles/gleu_toy.py, an independent
// brute-force n-gram counter, before the C++ scorer existed.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gleu_oracle.hpp"
#include "generators.hpp"

namespace gecforge::fixtures {

inline const std::vector<std::string> kToySources = {
    "he go to school every day", "she have two cat at home", "they is playing in the park"};
inline const std::vector<std::string> kToyReferences = {
    "he goes to school every day", "she has two cats at home", "they are playing in the park"};
inline const std::vector<std::string> kToyHypotheses = {
    "he goes to school each day", "she has two cat at home", "they are playing in a park"};

/// hyp_length, ref_length, then (matches, totals) for n = 1..4.
inline constexpr std::array<std::uint64_t, 10> kToyPooled = {18, 18, 14, 18, 7, 15, 4, 12, 2, 9};
inline constexpr double kToyScore = 0.40493203472863382;
inline constexpr double kToyTolerance = 1e-9;

struct GleuFixture {
  std::vector<std::string> src, hyp, ref;
};

/// Reference sentences use distinct tokens; the source swaps some of them
/// for source-only tokens. Hypothesis starts as a copy of the reference.
inline GleuFixture random_gleu_fixture(testgen::Rng& rng) {
  GleuFixture f;
  const int sentences = testgen::uniform(rng, 1, 5);
  int next_id = 0;
  for (int s = 0; s < sentences; ++s) {
    std::vector<std::string> ref, src;
    for (int k = testgen::uniform(rng, 2, 9); k > 0; --k) {
      ref.push_back("r" + std::to_string(next_id++));
      src.push_back(testgen::coin(rng, 0.4) ? "s" + std::to_string(next_id++) : ref.back());
    }
    auto join = [](const std::vector<std::string>& v) {
      std::string out;
      for (const auto& t : v) out += (out.empty() ? "" : " ") + t;
      return out;
    };
    f.ref.push_back(join(ref));
    f.src.push_back(join(src));
    f.hyp.push_back(f.ref.back());
  }
  return f;
}

/// True when every hypothesis n-gram (n <= max_n) covering position k is a
/// clean reference match: present in the reference at least as often as in
/// the hypothesis, and no more often in the source than in the reference.
inline bool matched_in_context(const std::vector<std::string>& src,
                               const std::vector<std::string>& hyp,
                               const std::vector<std::string>& ref, std::size_t k,
                               int max_n = 4) {
  for (int n = 1; n <= max_n; ++n) {
    const auto hg = oracle::all_ngrams(hyp, n);
    const auto rg = oracle::all_ngrams(ref, n);
    const auto sg = oracle::all_ngrams(src, n);
    for (std::size_t start = k + 1 >= static_cast<std::size_t>(n) ? k + 1 - n : 0;
         start <= k && start < hg.size(); ++start) {
      const auto& g = hg[start];
      const long long h = oracle::occurrences(hg, g), r = oracle::occurrences(rg, g),
                      sc = oracle::occurrences(sg, g);
      if (r < h || sc > r) return false;
    }
  }
  return true;
}

/// Replaces one hypothesis token that matches the reference in context (see
/// matched_in_context) with a source-only token not yet used in that
/// hypothesis. Returns false if no such replacement is left.
inline bool penalize_one(testgen::Rng& rng, GleuFixture& f) {
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  std::vector<std::vector<std::string>> hyp_tokens, src_only;
  for (std::size_t i = 0; i < f.hyp.size(); ++i) {
    hyp_tokens.push_back(oracle::split_ws(f.hyp[i]));
    const auto ref = oracle::split_ws(f.ref[i]);
    std::vector<std::string> unused;
    for (const auto& t : oracle::split_ws(f.src[i])) {
      if (std::find(ref.begin(), ref.end(), t) == ref.end() &&
          std::find(hyp_tokens[i].begin(), hyp_tokens[i].end(), t) == hyp_tokens[i].end()) {
        unused.push_back(t);
      }
    }
    src_only.push_back(unused);
    if (unused.empty()) continue;
    const auto src = oracle::split_ws(f.src[i]);
    for (std::size_t k = 0; k < hyp_tokens[i].size(); ++k) {
      if (matched_in_context(src, hyp_tokens[i], ref, k)) candidates.emplace_back(i, k);
    }
  }
  if (candidates.empty()) return false;
  const auto [i, k] = testgen::pick(rng, candidates);
  hyp_tokens[i][k] = testgen::pick(rng, src_only[i]);
  std::string joined;
  for (const auto& t : hyp_tokens[i]) joined += (joined.empty() ? "" : " ") + t;
  f.hyp[i] = joined;
  return true;
}

}  // namespace gecforge::fixtures
