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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gecforge/category.hpp"
#include "gecforge/profile.hpp"

namespace gecforge {

/// Functional value of a model edit relative to its input.
enum class Stratum { kRedundant, kRectifying, kRisky, kNone };

inline constexpr std::size_t kStratumCount = 4;
inline constexpr std::array<Stratum, kStratumCount> kAllStrata = {
    Stratum::kRedundant, Stratum::kRectifying, Stratum::kRisky, Stratum::kNone};

inline constexpr std::size_t kDefaultEditCap = 5;

std::string_view to_string(Stratum stratum);

constexpr std::size_t stratum_index(Stratum s) {
  return static_cast<std::size_t>(s);
}

struct EditAudit {
  ErrorCategory category = ErrorCategory::kNoError;
  Stratum stratum = Stratum::kNone;
  /// Token-level Levenshtein distance between input and prediction.
  std::size_t edit_distance = 0;
  /// Non-punctuation tokens removed in one place and re-added in another.
  std::size_t moved_tokens = 0;
  bool multiset_preserving_reorder = false;
  bool distance_cap_exceeded = false;

  friend bool operator==(const EditAudit&, const EditAudit&) = default;
};

/// Stratum rules, first match wins:
///   none        category is No Error or Null/Empty
///   redundant   Punctuation/Whitespace
///   risky       Word Order (multiset-preserving reorder) or distance > cap
///   rectifying  any other category within the cap
EditAudit audit_pair(std::string_view input, std::string_view prediction,
                     const LanguageProfile& profile,
                     std::size_t cap = kDefaultEditCap);

/// True when the prediction counts as an edit (stratum other than none).
inline bool did_edit(const EditAudit& audit) {
  return audit.stratum != Stratum::kNone;
}

struct Reconciliation {
  std::string chosen;
  bool chose_a = true;
  /// identical | stratum | edit_distance | reordering | first_candidate
  std::string reason;
  EditAudit audit_a;
  EditAudit audit_b;
};

/// Picks between two predictions for the same input: rectifying beats
/// redundant beats risky beats none, then lower token edit distance, then
/// fewer moved tokens, then candidate A.
Reconciliation reconcile(std::string_view input, std::string_view cand_a,
                         std::string_view cand_b, const LanguageProfile& profile,
                         std::size_t cap = kDefaultEditCap);

struct DualTriple {
  std::string input;
  std::string cand_a;
  std::string cand_b;
};

using CategoryMatrix =
    std::array<std::array<std::size_t, kCategoryCount>, kCategoryCount>;
using StratumMatrix =
    std::array<std::array<std::size_t, kStratumCount>, kStratumCount>;

struct DualReport {
  /// [category of A][category of B].
  CategoryMatrix agreement{};
  /// [stratum of A][stratum of B], none stratum included. Rows and
  /// columns each sum to the number of triples.
  StratumMatrix strata_cross{};
  std::size_t union_count = 0;
  std::size_t intersection_count = 0;
  std::size_t conflict_count = 0;
  std::vector<Reconciliation> resolutions;
};

/// Throws InputError for an empty list.
DualReport dual_report(std::span<const DualTriple> triples,
                       const LanguageProfile& profile,
                       std::size_t cap = kDefaultEditCap);

}  // namespace gecforge
