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

#include "gecforge/gleu.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gecforge/error.hpp"
#include "gecforge/unicode.hpp"

namespace gecforge {

namespace {

using Ngram = std::vector<std::string_view>;
using NgramCounts = std::map<Ngram, std::uint64_t>;

NgramCounts count_ngrams(std::span<const std::string> tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    Ngram g(tokens.begin() + i, tokens.begin() + i + n);
    ++counts[std::move(g)];
  }
  return counts;
}

std::uint64_t lookup(const NgramCounts& counts, const Ngram& g) {
  const auto it = counts.find(g);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace

NgramStats& NgramStats::operator+=(const NgramStats& other) {
  hyp_length += other.hyp_length;
  ref_length += other.ref_length;
  for (std::size_t i = 0; i < matches.size() && i < other.matches.size(); ++i) {
    matches[i] += other.matches[i];
    totals[i] += other.totals[i];
  }
  return *this;
}

std::vector<std::string> whitespace_tokens(std::string_view text) {
  const std::u32string u = unicode::decode_utf8(text);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < u.size()) {
    while (i < u.size() && unicode::is_white_space(u[i])) ++i;
    std::size_t j = i;
    while (j < u.size() && !unicode::is_white_space(u[j])) ++j;
    if (j > i) out.push_back(unicode::encode_utf8(std::u32string_view(u).substr(i, j - i)));
    i = j;
  }
  return out;
}

NgramStats sentence_stats(std::span<const std::string> source,
                          std::span<const std::string> hypothesis,
                          std::span<const std::string> reference, int max_n) {
  NgramStats stats(max_n);
  stats.hyp_length = hypothesis.size();
  stats.ref_length = reference.size();
  for (int n = 1; n <= max_n; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const NgramCounts h = count_ngrams(hypothesis, un);
    const NgramCounts r = count_ngrams(reference, un);
    const NgramCounts s = count_ngrams(source, un);
    std::uint64_t overlap = 0;
    std::uint64_t penalty = 0;
    for (const auto& [g, hc] : h) {
      const std::uint64_t rc = lookup(r, g);
      const std::uint64_t sc = lookup(s, g);
      overlap += std::min(hc, rc);
      if (sc > rc) penalty += std::min(hc, sc - rc);
    }
    stats.matches[un - 1] = overlap > penalty ? overlap - penalty : 0;
    stats.totals[un - 1] =
        hypothesis.size() >= un ? hypothesis.size() - un + 1 : 0;
  }
  return stats;
}

double gleu_from_stats(const NgramStats& stats, bool smooth) {
  auto val = [smooth](std::uint64_t x) {
    return static_cast<double>(smooth && x == 0 ? 1 : x);
  };
  if (!smooth) {
    if (stats.hyp_length == 0 || stats.ref_length == 0) return 0.0;
    for (std::size_t i = 0; i < stats.matches.size(); ++i) {
      if (stats.matches[i] == 0 || stats.totals[i] == 0) return 0.0;
    }
  }
  const double c = val(stats.hyp_length);
  const double r = val(stats.ref_length);
  double log_precision = 0.0;
  for (std::size_t i = 0; i < stats.matches.size(); ++i) {
    log_precision += std::log(val(stats.matches[i]) / val(stats.totals[i]));
  }
  log_precision /= static_cast<double>(stats.matches.size());
  return std::exp(std::min(0.0, 1.0 - r / c) + log_precision);
}

GleuReport gleu_corpus(std::span<const std::string> sources,
                       std::span<const std::string> hypotheses,
                       std::span<const std::string> references, int max_n) {
  if (max_n < 1) throw InputError("max_n must be at least 1");
  if (sources.size() != hypotheses.size() ||
      sources.size() != references.size()) {
    throw InputError("GLEU inputs differ in length: " +
                     std::to_string(sources.size()) + " sources, " +
                     std::to_string(hypotheses.size()) + " hypotheses, " +
                     std::to_string(references.size()) + " references");
  }
  if (sources.empty()) throw InputError("GLEU needs a non-empty corpus");

  GleuReport report;
  report.max_n = max_n;
  report.stats = NgramStats(max_n);
  report.per_sentence.reserve(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const auto src = whitespace_tokens(sources[i]);
    const auto hyp = whitespace_tokens(hypotheses[i]);
    const auto ref = whitespace_tokens(references[i]);
    const NgramStats s = sentence_stats(src, hyp, ref, max_n);
    report.per_sentence.push_back(gleu_from_stats(s, /*smooth=*/true));
    report.stats += s;
  }
  report.corpus_score = gleu_from_stats(report.stats);
  return report;
}

}  // namespace gecforge
