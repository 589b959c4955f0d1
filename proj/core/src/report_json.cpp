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

#include "gecforge/report_json.hpp"

#include "gecforge/error.hpp"
#include "gecforge/version.hpp"

namespace gecforge {

Json report_header(std::string_view kind) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = kind;
  j["tool_version"] = kVersion;
  return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const NormalizationPolicy& policy) {
  Json j;
  j["nfkc"] = true;
  j["strip_invisibles"] = policy.strip_invisibles;
  j["strip_joiners"] = policy.strip_joiners;
  j["collapse_whitespace"] = policy.collapse_whitespace;
  j["unify_terminal_punct"] = policy.unify_terminal_punct;
  j["danda_policy"] = to_string(policy.danda);
  j["digit_policy"] = to_string(policy.digits);
  return j;
}

NormalizationPolicy policy_from_json(const Json& j) {
  NormalizationPolicy p;
  if (!j.is_object()) throw SchemaError("normalization policy must be an object");
  auto flag = [&](const char* key, bool& field) {
    if (j.contains(key)) field = j.at(key).get<bool>();
  };
  flag("strip_invisibles", p.strip_invisibles);
  flag("strip_joiners", p.strip_joiners);
  flag("collapse_whitespace", p.collapse_whitespace);
  flag("unify_terminal_punct", p.unify_terminal_punct);
  if (j.contains("danda_policy")) {
    p.danda = parse_danda_policy(j.at("danda_policy").get<std::string>());
  }
  if (j.contains("digit_policy")) {
    p.digits = parse_digit_policy(j.at("digit_policy").get<std::string>());
  }
  return p;
}

Json to_json(const Evidence& ev) {
  Json j;
  j["stage"] = static_cast<int>(ev.stage);
  j["stage_name"] = to_string(ev.stage);
  if (ev.stage == Stage::kAlignment || ev.stage == Stage::kFallback) {
    Json flags;
    flags["insert_delete"] = ev.saw_insert_delete;
    flags["replace"] = ev.saw_replace;
    flags["syntax"] = ev.touched_syntax;
    flags["morphology"] = ev.saw_morphology;
    flags["spelling"] = ev.saw_spelling;
    j["flags"] = flags;
    Json ops = Json::array();
    for (const auto& op : ev.ops) {
      if (op.tag == OpTag::kEqual) continue;
      Json o;
      o["tag"] = to_string(op.tag);
      o["a"] = Json::array({op.a_begin, op.a_end});
      o["b"] = Json::array({op.b_begin, op.b_end});
      Json from = Json::array();
      for (auto i = op.a_begin; i < op.a_end; ++i) from.push_back(ev.input_tokens[i]);
      Json to = Json::array();
      for (auto i = op.b_begin; i < op.b_end; ++i) to.push_back(ev.output_tokens[i]);
      o["from"] = from;
      o["to"] = to;
      ops.push_back(o);
    }
    j["edits"] = ops;
    if (ev.syntax_hit) j["syntax_hit"] = *ev.syntax_hit;
    if (ev.morphology_pair) {
      j["morphology_pair"] = Json::array({ev.morphology_pair->first, ev.morphology_pair->second});
    }
    if (ev.spelling_pair) {
      j["spelling_pair"] = Json::array({ev.spelling_pair->first, ev.spelling_pair->second});
    }
  }
  return j;
}

Json to_json(const DistributionReport& report) {
  const LanguageProfile& profile = LanguageProfile::builtin(report.lang);
  Json j = report_header("distribution");
  j["lang"] = language_code(report.lang);
  j["split"] = to_string(report.split);
  j["total"] = report.total;
  Json counts;
  Json labels;
  for (ErrorCategory c : kAllCategories) {
    counts[std::string(category_key(c))] = report.count(c);
    labels[std::string(category_key(c))] = category_label(c, profile);
  }
  j["counts"] = counts;
  j["labels"] = labels;
  Json order = Json::array();
  for (ErrorCategory c : report.precedence_order) order.push_back(category_key(c));
  j["precedence_order"] = order;
  if (report.normalization) {
    j["normalization_stage"] = "before_classification";
    j["normalization"] = to_json(*report.normalization);
  } else {
    j["normalization_stage"] = "none";
    j["normalization"] = nullptr;
  }
  return j;
}

DistributionReport distribution_from_json(const Json& j) {
  try {
    if (j.at("kind").get<std::string>() != "distribution") {
      throw SchemaError("not a distribution report (kind is '" +
                        j.at("kind").get<std::string>() + "')");
    }
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw SchemaError("unsupported distribution schema_version " +
                        j.at("schema_version").dump());
    }
    DistributionReport r;
    r.lang = parse_language(j.at("lang").get<std::string>());
    r.split = parse_split(j.at("split").get<std::string>());
    r.total = j.at("total").get<std::size_t>();
    const Json& counts = j.at("counts");
    std::size_t sum = 0;
    for (ErrorCategory c : kAllCategories) {
      r.counts[category_index(c)] = counts.at(std::string(category_key(c))).get<std::size_t>();
      sum += r.counts[category_index(c)];
    }
    if (counts.size() != kCategoryCount) {
      throw SchemaError("distribution counts must list exactly the nine categories");
    }
    if (sum != r.total) {
      throw SchemaError("distribution counts sum to " + std::to_string(sum) +
                        " but total is " + std::to_string(r.total));
    }
    const Json& order = j.at("precedence_order");
    if (order.size() != kCategoryCount) {
      throw SchemaError("precedence_order must list nine categories");
    }
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
      r.precedence_order[i] = parse_category(order.at(i).get<std::string>());
    }
    if (j.contains("normalization") && !j.at("normalization").is_null()) {
      r.normalization = policy_from_json(j.at("normalization"));
    }
    return r;
  } catch (const SchemaError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed distribution report: ") + e.what());
  } catch (const InputError& e) {
    throw SchemaError(std::string("malformed distribution report: ") + e.what());
  }
}

Json to_json(const GleuReport& report) {
  Json j = report_header("gleu");
  j["corpus_score"] = report.corpus_score;
  j["corpus_score_x100"] = report.corpus_score * 100.0;
  j["max_n"] = report.max_n;
  j["sentences"] = report.per_sentence.size();
  j["hyp_length"] = report.stats.hyp_length;
  j["ref_length"] = report.stats.ref_length;
  Json orders = Json::array();
  for (std::size_t i = 0; i < report.stats.matches.size(); ++i) {
    Json o;
    o["n"] = i + 1;
    o["matches"] = report.stats.matches[i];
    o["total"] = report.stats.totals[i];
    orders.push_back(o);
  }
  j["ngram_stats"] = orders;
  j["per_sentence"] = report.per_sentence;
  return j;
}

Json to_json(const EditAudit& audit) {
  Json j;
  j["category"] = category_key(audit.category);
  j["stratum"] = to_string(audit.stratum);
  j["edit_distance"] = audit.edit_distance;
  j["moved_tokens"] = audit.moved_tokens;
  j["multiset_preserving_reorder"] = audit.multiset_preserving_reorder;
  j["distance_cap_exceeded"] = audit.distance_cap_exceeded;
  return j;
}

Json to_json(const DualReport& report) {
  Json j;
  Json cats = Json::array();
  for (ErrorCategory c : kAllCategories) cats.push_back(category_key(c));
  j["categories"] = cats;
  j["agreement"] = report.agreement;
  Json strata = Json::array();
  for (Stratum s : kAllStrata) strata.push_back(to_string(s));
  j["strata"] = strata;
  j["strata_cross"] = report.strata_cross;
  j["union_count"] = report.union_count;
  j["intersection_count"] = report.intersection_count;
  j["conflict_count"] = report.conflict_count;
  Json res = Json::array();
  for (const auto& r : report.resolutions) {
    Json o;
    o["chosen"] = r.chose_a ? "a" : "b";
    o["reason"] = r.reason;
    o["a"] = to_json(r.audit_a);
    o["b"] = to_json(r.audit_b);
    res.push_back(o);
  }
  j["resolutions"] = res;
  return j;
}

Json to_json(const PromptSpec& spec) {
  Json j = report_header("prompt");
  j["lang"] = language_code(spec.lang);
  Json p = Json::array();
  for (ErrorCategory c : spec.prioritized) p.push_back(category_key(c));
  j["prioritized"] = p;
  Json d = Json::array();
  for (ErrorCategory c : spec.deprioritized) d.push_back(category_key(c));
  j["deprioritized"] = d;
  j["constraints"] = spec.constraints;
  j["sha256"] = sha256_hex(spec.rendered);
  return j;
}

}  // namespace gecforge
