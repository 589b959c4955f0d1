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

#include <json.hpp>

#include "gecforge/audit.hpp"
#include "gecforge/classifier.hpp"
#include "gecforge/corpus.hpp"
#include "gecforge/gleu.hpp"
#include "gecforge/prompt.hpp"
#include "gecforge/textnorm.hpp"

namespace gecforge {

/// Insertion-ordered so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const NormalizationPolicy& policy);
/// Missing keys keep their defaults.
NormalizationPolicy policy_from_json(const Json& j);

Json to_json(const Evidence& evidence);
Json to_json(const DistributionReport& report);
/// Throws SchemaError on a missing field, unknown key or count mismatch.
DistributionReport distribution_from_json(const Json& j);
Json to_json(const GleuReport& report);
Json to_json(const EditAudit& audit);
Json to_json(const DualReport& report);
Json to_json(const PromptSpec& spec);

/// `{"schema_version": N, "kind": kind, "tool_version": ...}` header that
/// every report starts with.
Json report_header(std::string_view kind);

/// Two-space indented dump with a trailing newline.
std::string dump_report(const Json& j);

}  // namespace gecforge
