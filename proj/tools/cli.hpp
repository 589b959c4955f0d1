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

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "gecforge/profile.hpp"
#include "gecforge/textnorm.hpp"

namespace gecforge::cli {

/// Settings shared by all subcommands. Defaults match the reference
/// pipeline: NFKC with invisibles stripped, 4-gram GLEU, edit cap 5.
struct RunConfig {
  std::optional<Language> lang;
  NormalizationPolicy normalization;
  std::optional<std::filesystem::path> lexicon_path;
  int max_n = 4;
  int cap = 5;
  /// Accepted for harness compatibility; GLEU ignores it.
  std::optional<long long> seed;

  /// Applies `key = value` settings (config file or flags).
  void apply(const std::map<std::string, std::string>& settings);
};

/// Reads a `key = value` config file ('#' comments, blank lines allowed).
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Temp sibling file, then rename.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

/// Entry point behind the gec-forge binary. argv[0] is the program name.
/// Returns 0 on success, 1 on input/schema errors or bad usage, 2 on
/// internal errors.
int run(std::span<const std::string> argv, std::ostream& out, std::ostream& err);

}  // namespace gecforge::cli
