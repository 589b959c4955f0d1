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

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gecforge/profile.hpp"
#include "gecforge/tokenizer.hpp"

namespace gecforge {

enum class OpTag { kEqual, kInsert, kDelete, kReplace };

std::string_view to_string(OpTag tag);

/// One aligned span: a[a_begin, a_end) becomes b[b_begin, b_end).
struct Opcode {
  OpTag tag;
  std::size_t a_begin;
  std::size_t a_end;
  std::size_t b_begin;
  std::size_t b_end;

  friend bool operator==(const Opcode&, const Opcode&) = default;
};

struct EditScript {
  std::vector<Opcode> ops;

  bool has(OpTag tag) const {
    return std::any_of(ops.begin(), ops.end(),
                       [tag](const Opcode& op) { return op.tag == tag; });
  }
  friend bool operator==(const EditScript&, const EditScript&) = default;
};

struct MatchingBlock {
  std::size_t a;
  std::size_t b;
  std::size_t size;

  friend bool operator==(const MatchingBlock&, const MatchingBlock&) = default;
};

namespace detail {

// Longest common contiguous block of a[alo, ahi) and b[blo, bhi). Ties go
// to the smallest start in a, then the smallest start in b.
template <typename T>
MatchingBlock longest_match(std::span<const T> a, std::span<const T> b,
                            std::size_t alo, std::size_t ahi, std::size_t blo,
                            std::size_t bhi) {
  MatchingBlock best{alo, blo, 0};
  std::vector<std::size_t> prev(bhi - blo + 1, 0);
  std::vector<std::size_t> cur(bhi - blo + 1, 0);
  for (std::size_t i = alo; i < ahi; ++i) {
    for (std::size_t j = blo; j < bhi; ++j) {
      const std::size_t col = j - blo + 1;
      cur[col] = a[i] == b[j] ? prev[col - 1] + 1 : 0;
      if (cur[col] > best.size) {
        best = {i + 1 - cur[col], j + 1 - cur[col], cur[col]};
      }
    }
    std::swap(prev, cur);
  }
  return best;
}

}  // namespace detail

/// Recursive longest-block decomposition; adjacent blocks are merged and a
/// zero-size sentinel at (|a|, |b|) terminates the list.
template <typename T>
std::vector<MatchingBlock> matching_blocks(std::span<const T> a,
                                           std::span<const T> b) {
  struct Region {
    std::size_t alo, ahi, blo, bhi;
  };
  std::vector<MatchingBlock> found;
  std::vector<Region> pending{{0, a.size(), 0, b.size()}};
  while (!pending.empty()) {
    const Region r = pending.back();
    pending.pop_back();
    const MatchingBlock m = detail::longest_match(a, b, r.alo, r.ahi, r.blo, r.bhi);
    if (m.size == 0) continue;
    found.push_back(m);
    if (r.alo < m.a && r.blo < m.b) pending.push_back({r.alo, m.a, r.blo, m.b});
    if (m.a + m.size < r.ahi && m.b + m.size < r.bhi) {
      pending.push_back({m.a + m.size, r.ahi, m.b + m.size, r.bhi});
    }
  }
  std::sort(found.begin(), found.end(),
            [](const MatchingBlock& x, const MatchingBlock& y) {
              return x.a != y.a ? x.a < y.a : x.b < y.b;
            });
  std::vector<MatchingBlock> merged;
  for (const auto& m : found) {
    if (!merged.empty() && merged.back().a + merged.back().size == m.a &&
        merged.back().b + merged.back().size == m.b) {
      merged.back().size += m.size;
    } else {
      merged.push_back(m);
    }
  }
  merged.push_back({a.size(), b.size(), 0});
  return merged;
}

template <typename T>
EditScript align_sequences(std::span<const T> a, std::span<const T> b) {
  EditScript script;
  std::size_t i = 0;
  std::size_t j = 0;
  for (const auto& m : matching_blocks(a, b)) {
    OpTag tag = OpTag::kEqual;
    bool edit = true;
    if (i < m.a && j < m.b) {
      tag = OpTag::kReplace;
    } else if (i < m.a) {
      tag = OpTag::kDelete;
    } else if (j < m.b) {
      tag = OpTag::kInsert;
    } else {
      edit = false;
    }
    if (edit) script.ops.push_back({tag, i, m.a, j, m.b});
    i = m.a + m.size;
    j = m.b + m.size;
    if (m.size > 0) script.ops.push_back({OpTag::kEqual, m.a, i, m.b, j});
  }
  return script;
}

/// Token alignment by token text.
EditScript align(std::span<const std::string> a, std::span<const std::string> b);
EditScript align(const std::vector<Token>& a, const std::vector<Token>& b);

/// Rebuilds b by walking the script over a (equal spans copied from a,
/// insert/replace spans taken from b).
std::vector<std::string> apply_edit_script(std::span<const std::string> a,
                                           std::span<const std::string> b,
                                           const EditScript& script);

/// Unit-cost edit distance over arbitrary element sequences.
template <typename T>
std::size_t levenshtein_sequence(std::span<const T> a, std::span<const T> b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      const std::size_t next = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = row[j];
      row[j] = next;
    }
  }
  return row[b.size()];
}

/// Character (code point) edit distance.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// Long-common-prefix test: strips the longest common code point prefix
/// and reports whether the remaining tails differ and either one ends with
/// a listed suffix.
bool suffix_tail_change(std::string_view a, std::string_view b,
                        std::span<const std::string> suffixes);

/// True iff any token is an auxiliary or postposition of the profile.
bool touches_syntax(std::span<const std::string> segment,
                    const LanguageProfile& profile);
bool touches_syntax(std::span<const Token> segment,
                    const LanguageProfile& profile);

}  // namespace gecforge
