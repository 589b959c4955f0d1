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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gecforge {

inline constexpr int kDefaultMaxN = 4;

/// Integer tallies behind a GLEU score. Pooling is plain addition.
struct NgramStats {
  std::uint64_t hyp_length = 0;
  std::uint64_t ref_length = 0;
  /// Index n-1: source-penalized matched n-grams and hypothesis n-grams.
  std::vector<std::uint64_t> matches;
  std::vector<std::uint64_t> totals;

  explicit NgramStats(int max_n = kDefaultMaxN)
      : matches(static_cast<std::size_t>(max_n), 0),
        totals(static_cast<std::size_t>(max_n), 0) {}

  NgramStats& operator+=(const NgramStats& other);
  friend bool operator==(const NgramStats&, const NgramStats&) = default;
};

struct GleuReport {
  double corpus_score = 0.0;
  std::vector<double> per_sentence;
  int max_n = kDefaultMaxN;
  NgramStats stats;
};

/// Splits on Unicode whitespace.
std::vector<std::string> whitespace_tokens(std::string_view text);

/// Per-sentence tallies. For each order n the match count is
///   sum_g min(h(g), r(g)) - sum_g min(h(g), max(0, s(g) - r(g)))
/// floored at zero, where h, r, s count n-grams of hypothesis, reference
/// and source.
NgramStats sentence_stats(std::span<const std::string> source,
                          std::span<const std::string> hypothesis,
                          std::span<const std::string> reference, int max_n);

/// BP * exp(mean_n log(matches_n / totals_n)) with
/// BP = exp(min(0, 1 - ref_length / hyp_length)). Any zero tally gives 0.
/// With `smooth`, zero tallies are replaced by 1 first (sentence level).
double gleu_from_stats(const NgramStats& stats, bool smooth = false);

/// Single-reference corpus GLEU. Inputs are whitespace-tokenized as given;
/// normalize them beforehand. The corpus score comes from pooled tallies;
/// per-sentence scores use smoothing. Throws InputError on length mismatch,
/// an empty corpus or max_n < 1.
GleuReport gleu_corpus(std::span<const std::string> sources,
                       std::span<const std::string> hypotheses,
                       std::span<const std::string> references,
                       int max_n = kDefaultMaxN);

}  // namespace gecforge
