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

#include "gecforge/audit.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "gecforge/alignment.hpp"
#include "gecforge/classifier.hpp"
#include "gecforge/error.hpp"
#include "gecforge/textnorm.hpp"
#include "gecforge/tokenizer.hpp"

namespace gecforge {

namespace {

int stratum_rank(Stratum s) {
  switch (s) {
    case Stratum::kRectifying: return 0;
    case Stratum::kRedundant: return 1;
    case Stratum::kRisky: return 2;
    case Stratum::kNone: return 3;
  }
  return 3;
}

std::size_t count_moved(const std::vector<Token>& a, const std::vector<Token>& b,
                        const EditScript& script, const LanguageProfile& profile) {
  std::map<std::string, std::size_t> removed;
  std::map<std::string, std::size_t> added;
  for (const auto& op : script.ops) {
    if (op.tag == OpTag::kEqual) continue;
    for (std::size_t i = op.a_begin; i < op.a_end; ++i) {
      if (!is_punct(a[i], profile)) ++removed[a[i].text];
    }
    for (std::size_t j = op.b_begin; j < op.b_end; ++j) {
      if (!is_punct(b[j], profile)) ++added[b[j].text];
    }
  }
  std::size_t moved = 0;
  for (const auto& [text, n] : removed) {
    if (auto it = added.find(text); it != added.end()) moved += std::min(n, it->second);
  }
  return moved;
}

}  // namespace

std::string_view to_string(Stratum stratum) {
  switch (stratum) {
    case Stratum::kRedundant: return "redundant";
    case Stratum::kRectifying: return "rectifying";
    case Stratum::kRisky: return "risky";
    case Stratum::kNone: return "none";
  }
  return "none";
}

EditAudit audit_pair(std::string_view input, std::string_view prediction,
                     const LanguageProfile& profile, std::size_t cap) {
  EditAudit audit;
  audit.category = classify_pair(input, prediction, profile).category;

  const NormalizationPolicy view = comparison_policy();
  const auto a = tokenize(normalize_text(input, view), profile);
  const auto b = tokenize(normalize_text(prediction, view), profile);
  const auto ta = token_texts(a);
  const auto tb = token_texts(b);
  audit.edit_distance = levenshtein_sequence(std::span<const std::string>(ta),
                                             std::span<const std::string>(tb));
  audit.moved_tokens = count_moved(a, b, align(a, b), profile);
  audit.multiset_preserving_reorder = audit.category == ErrorCategory::kWordOrder;
  audit.distance_cap_exceeded = audit.edit_distance > cap;

  switch (audit.category) {
    case ErrorCategory::kNoError:
    case ErrorCategory::kNullEmpty:
      audit.stratum = Stratum::kNone;
      break;
    case ErrorCategory::kPunctWhitespace:
      audit.stratum = Stratum::kRedundant;
      break;
    default:
      audit.stratum = audit.multiset_preserving_reorder || audit.distance_cap_exceeded
                          ? Stratum::kRisky
                          : Stratum::kRectifying;
      break;
  }
  return audit;
}

Reconciliation reconcile(std::string_view input, std::string_view cand_a,
                         std::string_view cand_b, const LanguageProfile& profile,
                         std::size_t cap) {
  Reconciliation r;
  r.audit_a = audit_pair(input, cand_a, profile, cap);
  r.audit_b = audit_pair(input, cand_b, profile, cap);
  if (cand_a == cand_b) {
    r.chosen = std::string(cand_a);
    r.chose_a = true;
    r.reason = "identical";
    return r;
  }
  const auto key = [](const EditAudit& x) {
    return std::make_tuple(stratum_rank(x.stratum), x.edit_distance, x.moved_tokens);
  };
  const auto ka = key(r.audit_a);
  const auto kb = key(r.audit_b);
  if (std::get<0>(ka) != std::get<0>(kb)) {
    r.reason = "stratum";
  } else if (std::get<1>(ka) != std::get<1>(kb)) {
    r.reason = "edit_distance";
  } else if (std::get<2>(ka) != std::get<2>(kb)) {
    r.reason = "reordering";
  } else {
    r.reason = "first_candidate";
  }
  r.chose_a = !(kb < ka);
  r.chosen = std::string(r.chose_a ? cand_a : cand_b);
  return r;
}

DualReport dual_report(std::span<const DualTriple> triples,
                       const LanguageProfile& profile, std::size_t cap) {
  if (triples.empty()) throw InputError("dual report needs at least one triple");
  DualReport report;
  report.resolutions.reserve(triples.size());
  for (const auto& t : triples) {
    Reconciliation r = reconcile(t.input, t.cand_a, t.cand_b, profile, cap);
    const EditAudit& a = r.audit_a;
    const EditAudit& b = r.audit_b;
    ++report.agreement[category_index(a.category)][category_index(b.category)];
    ++report.strata_cross[stratum_index(a.stratum)][stratum_index(b.stratum)];
    if (did_edit(a) || did_edit(b)) ++report.union_count;
    if (did_edit(a) && did_edit(b)) {
      if (a.category == b.category) {
        ++report.intersection_count;
      } else {
        ++report.conflict_count;
      }
    }
    report.resolutions.push_back(std::move(r));
  }
  return report;
}

}  // namespace gecforge
