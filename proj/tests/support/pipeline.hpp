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

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli.hpp"
#include "test_paths.hpp"

namespace gecforge::testing {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gec-forge");
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static unsigned counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("gecforge-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

/// Runs every subcommand over the shipped fixtures and returns the files
/// written, keyed by name. Throws if any step exits non-zero.
inline std::map<std::string, std::string> run_pipeline(const TempDir& dir) {
  const auto fx = [](const char* name) { return test_path(std::string("fixtures/") + name).string(); };
  const std::vector<std::vector<std::string>> steps = {
      {"--lang", "hi", "classify", "--in", fx("hi_train_10.csv"), "--split", "train", "--evidence",
       "--out", dir.file("hi_labels.csv")},
      {"--lang", "hi", "analyze", "--in", fx("hi_train_10.csv"), "--split", "train", "--report",
       dir.file("hi_dist.json")},
      {"synth-prompt", "--dist", dir.file("hi_dist.json"), "--out", dir.file("hi_prompt.txt"),
       "--spec", dir.file("hi_prompt.json")},
      {"--lang", "ml", "analyze", "--in", fx("ml_dev_6.csv"), "--split", "dev", "--report",
       dir.file("ml_dist.json")},
      {"synth-prompt", "--dist", dir.file("ml_dist.json"), "--out", dir.file("ml_prompt.txt")},
      {"score", "--src", fx("toy_src.txt"), "--hyp", fx("toy_hyp.txt"), "--ref", fx("toy_ref.txt"),
       "--report", dir.file("toy_gleu.json")},
      {"--lang", "hi", "normalize", "--postprocess", "--prompt-prefix",
       "सुधारा गया वाक्य:",
       "--in", fx("hi_hyp.txt"), "--out", dir.file("hi_hyp_clean.txt")},
      {"--lang", "hi", "audit", "--in", fx("hi_train_10.csv"), "--report", dir.file("hi_audit.json")},
      {"--lang", "hi", "audit", "--dual", fx("hi_preds_a.csv"), fx("hi_preds_b.csv"), "--report",
       dir.file("hi_dual_audit.json")},
  };
  for (const auto& step : steps) {
    const CliResult r = run_cli(step);
    if (r.code != 0) {
      throw std::runtime_error("pipeline step " + step[step.size() > 2 ? 2 : 0] +
                               " failed: " + r.err);
    }
  }
  std::map<std::string, std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir.path())) {
    files[entry.path().filename().string()] = slurp(entry.path());
  }
  return files;
}

inline std::filesystem::path golden_dir() { return test_path("golden"); }

/// Compares pipeline output with tests/golden. Returns a list of problems.
/// With GECFORGE_UPDATE_GOLDENS=1 in the environment the goldens are
/// rewritten instead.
inline std::vector<std::string> check_goldens(const std::map<std::string, std::string>& files) {
  std::vector<std::string> problems;
  const char* update = std::getenv("GECFORGE_UPDATE_GOLDENS");
  if (update != nullptr && std::string(update) == "1") {
    std::filesystem::create_directories(golden_dir());
    for (const auto& [name, bytes] : files) {
      std::ofstream(golden_dir() / name, std::ios::binary) << bytes;
    }
    return problems;
  }
  for (const auto& [name, bytes] : files) {
    const auto path = golden_dir() / name;
    if (!std::filesystem::exists(path)) {
      problems.push_back(name + ": no golden file");
    } else if (slurp(path) != bytes) {
      problems.push_back(name + ": differs from golden");
    }
  }
  for (const auto& entry : std::filesystem::directory_iterator(golden_dir())) {
    if (!files.contains(entry.path().filename().string())) {
      problems.push_back(entry.path().filename().string() + ": golden has no counterpart");
    }
  }
  return problems;
}

}  // namespace gecforge::testing
