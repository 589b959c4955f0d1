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

#include "cli.hpp"

#include <unicode/uversion.h>

#include <CLI11.hpp>
#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "gecforge/audit.hpp"
#include "gecforge/classifier.hpp"
#include "gecforge/corpus.hpp"
#include "gecforge/csv.hpp"
#include "gecforge/error.hpp"
#include "gecforge/gleu.hpp"
#include "gecforge/prompt.hpp"
#include "gecforge/report_json.hpp"
#include "gecforge/version.hpp"

namespace gecforge::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InputError("invalid integer for '" + key + "': '" + value + "'");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = nl + 1;
  }
  return lines;
}

std::string version_text() {
  std::ostringstream os;
  os << "gec-forge " << kVersion << "\n"
     << "report schema " << kReportSchemaVersion << "\n"
     << "ICU " << U_ICU_VERSION << "\n"
     << "compiler " << __VERSION__;
  return os.str();
}

// Options shared by every subcommand. Only flags that were given on the
// command line override the config file.
struct CommonOptions {
  std::string config;
  std::string lang;
  std::string lexicon;
  std::string strip_invisibles;
  std::string strip_joiners;
  std::string collapse_whitespace;
  std::string unify_terminal_punct;
  std::string danda_policy;
  std::string digit_policy;
  std::map<std::string, CLI::Option*> flags;

  void attach(CLI::App& app) {
    app.add_option("--config", config, "key = value run configuration file");
    flags["lang"] = app.add_option("--lang", lang, "Language: hi or ml");
    flags["lexicon"] = app.add_option(
        "--lexicon", lexicon, "Lexicon file (default: $GEC_FORGE_LEXICON, then built-in)");
    flags["strip_invisibles"] = app.add_option("--strip-invisibles", strip_invisibles,
                                               "Remove zero-width/bidi/soft-hyphen characters");
    flags["strip_joiners"] = app.add_option("--strip-joiners", strip_joiners,
                                            "Also remove ZWJ/ZWNJ when stripping invisibles");
    flags["collapse_whitespace"] = app.add_option("--collapse-whitespace", collapse_whitespace,
                                                  "Collapse whitespace runs and trim");
    flags["unify_terminal_punct"] = app.add_option(
        "--unify-terminal-punct", unify_terminal_punct, "Collapse runs of . । ? ! to the last mark");
    flags["danda_policy"] =
        app.add_option("--danda-policy", danda_policy,
                       "keep_danda | map_danda_to_period | map_period_to_danda");
    flags["digit_policy"] =
        app.add_option("--digit-policy", digit_policy, "to_ascii | keep_native");
  }

  std::map<std::string, std::string> given() const {
    const std::map<std::string, const std::string*> values = {
        {"lang", &lang},
        {"lexicon", &lexicon},
        {"strip_invisibles", &strip_invisibles},
        {"strip_joiners", &strip_joiners},
        {"collapse_whitespace", &collapse_whitespace},
        {"unify_terminal_punct", &unify_terminal_punct},
        {"danda_policy", &danda_policy},
        {"digit_policy", &digit_policy},
    };
    std::map<std::string, std::string> out;
    for (const auto& [key, opt] : flags) {
      if (opt->count() > 0) out[key] = *values.at(key);
    }
    return out;
  }
};

Language require_lang(const RunConfig& config) {
  if (!config.lang) throw InputError("--lang is required (hi or ml)");
  return *config.lang;
}

LanguageProfile load_profile(const RunConfig& config) {
  const std::filesystem::path* lex =
      config.lexicon_path ? &*config.lexicon_path : nullptr;
  return resolve_profile(require_lang(config), lex);
}

struct ClassifyArgs {
  std::string in;
  std::string out;
  std::string split = "train";
  bool evidence = false;
};

int cmd_classify(const RunConfig& config, const ClassifyArgs& args) {
  const LanguageProfile profile = load_profile(config);
  const auto pairs = load_pairs(args.in, profile.language(), parse_split(args.split),
                                config.normalization);
  std::ostringstream csv;
  std::vector<std::string> header = {"row", "category", "label"};
  if (args.evidence) header.emplace_back("evidence");
  write_csv_row(csv, header);
  for (const auto& p : pairs) {
    const Classification c = classify_pair(p.input, p.output, profile);
    std::vector<std::string> fields = {std::to_string(p.row),
                                       std::string(category_key(c.category)),
                                       category_label(c.category, profile)};
    if (args.evidence) fields.push_back(to_json(c.evidence).dump());
    write_csv_row(csv, fields);
  }
  write_file_atomically(args.out, csv.str());
  return 0;
}

struct AnalyzeArgs {
  std::string in;
  std::string report;
  std::string split = "train";
  bool drop_nulls = false;
  bool drop_duplicates = false;
};

int cmd_analyze(const RunConfig& config, const AnalyzeArgs& args) {
  const LanguageProfile profile = load_profile(config);
  LoadOptions options;
  options.drop_nulls = args.drop_nulls;
  options.drop_duplicates = args.drop_duplicates;
  const auto pairs = load_pairs(args.in, profile.language(), parse_split(args.split),
                                config.normalization, options);
  DistributionReport report = analyze(pairs, profile);
  report.split = parse_split(args.split);
  report.normalization = config.normalization;
  write_file_atomically(args.report, dump_report(to_json(report)));
  return 0;
}

struct ScoreArgs {
  std::string src;
  std::string hyp;
  std::string ref;
  std::string report;
  int iterations = 0;
};

int cmd_score(const RunConfig& config, const ScoreArgs& args, std::ostream& out,
              std::ostream& err) {
  if (config.seed || args.iterations > 0) {
    err << "note: --seed/--iterations ignored; single-reference GLEU has no "
           "sampling\n";
  }
  auto load = [&](const std::string& path) {
    auto lines = read_lines(path);
    for (auto& l : lines) l = normalize_text(l, config.normalization);
    return lines;
  };
  const auto src = load(args.src);
  const auto hyp = load(args.hyp);
  const auto ref = load(args.ref);
  const GleuReport report = gleu_corpus(src, hyp, ref, config.max_n);
  Json j = to_json(report);
  j["normalization"] = to_json(config.normalization);
  if (!args.report.empty()) write_file_atomically(args.report, dump_report(j));
  std::ostringstream line;
  line.precision(4);
  line << std::fixed << "GLEU = " << report.corpus_score * 100.0 << "\n";
  out << line.str();
  return 0;
}

struct NormalizeArgs {
  std::string in;
  std::string out;
  bool postprocess = false;
  std::string prompt_prefix;
};

int cmd_normalize(const RunConfig& config, const NormalizeArgs& args) {
  std::ostringstream text;
  std::optional<LanguageProfile> profile;
  if (args.postprocess) profile = load_profile(config);
  for (const auto& line : read_lines(args.in)) {
    std::string normalized = normalize_text(line, config.normalization);
    if (profile) {
      std::optional<std::string_view> prefix;
      if (!args.prompt_prefix.empty()) prefix = args.prompt_prefix;
      normalized = postprocess_hypothesis(normalized, prefix, *profile);
    }
    text << normalized << '\n';
  }
  write_file_atomically(args.out, text.str());
  return 0;
}

struct SynthArgs {
  std::string dist;
  std::string out;
  std::string spec;
};

int cmd_synth_prompt(const RunConfig& config, const SynthArgs& args) {
  Json j;
  try {
    j = Json::parse(read_file(args.dist));
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(args.dist + ": invalid JSON: " + e.what());
  }
  const DistributionReport report = distribution_from_json(j);
  const std::filesystem::path* lex =
      config.lexicon_path ? &*config.lexicon_path : nullptr;
  const LanguageProfile profile = resolve_profile(report.lang, lex);
  const PromptSpec spec = synthesize_prompt(report, profile);
  const std::string hash = sha256_hex(spec.rendered);
  write_file_atomically(args.out, spec.rendered);
  write_file_atomically(args.out + ".sha256",
                        hash + "  " + std::filesystem::path(args.out).filename().string() + "\n");
  if (!args.spec.empty()) write_file_atomically(args.spec, dump_report(to_json(spec)));
  return 0;
}

struct AuditArgs {
  std::string in;
  std::vector<std::string> dual;
  std::string report;
};

int cmd_audit(const RunConfig& config, const AuditArgs& args) {
  if (config.cap < 0) throw InputError("--cap must be non-negative");
  const auto cap = static_cast<std::size_t>(config.cap);
  const LanguageProfile profile = load_profile(config);
  const Language lang = profile.language();

  Json j = report_header(args.dual.empty() ? "audit" : "dual_audit");
  j["lang"] = language_code(lang);
  j["cap"] = cap;

  if (!args.dual.empty()) {
    const auto a = load_pairs(args.dual[0], lang, Split::kTest, config.normalization);
    const auto b = load_pairs(args.dual[1], lang, Split::kTest, config.normalization);
    if (a.size() != b.size()) {
      throw InputError("dual audit: " + args.dual[0] + " has " + std::to_string(a.size()) +
                       " rows but " + args.dual[1] + " has " + std::to_string(b.size()));
    }
    std::vector<DualTriple> triples;
    triples.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].input != b[i].input) {
        throw InputError("dual audit: inputs differ at row " + std::to_string(a[i].row));
      }
      triples.push_back({a[i].input, a[i].output, b[i].output});
    }
    const Json dual = to_json(dual_report(triples, profile, cap));
    for (const auto& [key, value] : dual.items()) j[key] = value;
  } else {
    if (args.in.empty()) throw InputError("audit needs --in or --dual");
    const auto pairs = load_pairs(args.in, lang, Split::kTest, config.normalization);
    std::array<std::size_t, kStratumCount> strata{};
    std::array<std::size_t, kCategoryCount> categories{};
    Json rows = Json::array();
    for (const auto& p : pairs) {
      const EditAudit audit = audit_pair(p.input, p.output, profile, cap);
      ++strata[stratum_index(audit.stratum)];
      ++categories[category_index(audit.category)];
      Json row;
      row["row"] = p.row;
      const Json fields = to_json(audit);
      for (const auto& [key, value] : fields.items()) row[key] = value;
      rows.push_back(row);
    }
    Json summary;
    summary["pairs"] = pairs.size();
    Json s;
    for (Stratum st : kAllStrata) s[std::string(to_string(st))] = strata[stratum_index(st)];
    summary["strata"] = s;
    Json c;
    for (ErrorCategory cat : kAllCategories) {
      c[std::string(category_key(cat))] = categories[category_index(cat)];
    }
    summary["categories"] = c;
    j["summary"] = summary;
    j["pairs"] = rows;
  }
  write_file_atomically(args.report, dump_report(j));
  return 0;
}

}  // namespace

void RunConfig::apply(const std::map<std::string, std::string>& settings) {
  static const std::set<std::string> kPolicyKeys = {
      "strip_invisibles", "strip_joiners", "collapse_whitespace",
      "unify_terminal_punct", "danda_policy", "digit_policy"};
  for (const auto& [key, value] : settings) {
    if (key == "lang") {
      lang = parse_language(value);
    } else if (key == "lexicon") {
      lexicon_path = value.empty() ? std::nullopt
                                   : std::optional<std::filesystem::path>(value);
    } else if (key == "max_n") {
      max_n = parse_int(key, value);
    } else if (key == "cap") {
      cap = parse_int(key, value);
    } else if (key == "seed") {
      seed = parse_int(key, value);
    } else if (!kPolicyKeys.contains(key)) {
      throw InputError("unknown configuration key '" + key + "'");
    }
  }
  normalization.apply(settings);
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::map<std::string, std::string> settings;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InputError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 'key = value'");
    }
    settings[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
  }
  return settings;
}

void write_file_atomically(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write file: " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw InputError("failed writing file: " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot move report into place: " + path.string());
  }
}

int run(std::span<const std::string> argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grammatical error correction analysis toolkit for Hindi and Malayalam",
               "gec-forge"};
  app.set_version_flag("--version", version_text());
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  common.attach(app);

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Label each sentence pair with one error category");
  classify->add_option("--in", classify_args.in, "Input CSV (Input sentence, Output sentence)")
      ->required();
  classify->add_option("--out", classify_args.out, "Output labels CSV")->required();
  classify->add_option("--split", classify_args.split, "train | dev | test");
  classify->add_flag("--evidence", classify_args.evidence, "Append an evidence JSON column");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Error-category distribution of a split");
  analyze_cmd->add_option("--in", analyze_args.in, "Input CSV")->required();
  analyze_cmd->add_option("--report", analyze_args.report, "Distribution JSON")->required();
  analyze_cmd->add_option("--split", analyze_args.split, "train | dev | test");
  analyze_cmd->add_flag("--drop-nulls", analyze_args.drop_nulls, "Remove null/blank pairs");
  analyze_cmd->add_flag("--drop-duplicates", analyze_args.drop_duplicates,
                        "Remove exact duplicate pairs");

  ScoreArgs score_args;
  std::string max_n_text;
  std::string seed_text;
  auto* score = app.add_subcommand("score", "Corpus GLEU against a single reference");
  score->add_option("--src", score_args.src, "Source sentences, one per line")->required();
  score->add_option("--hyp", score_args.hyp, "Hypotheses, one per line")->required();
  score->add_option("--ref", score_args.ref, "References, one per line")->required();
  auto* max_n_opt = score->add_option("--max-n", max_n_text, "Maximum n-gram order (default 4)");
  score->add_option("--report", score_args.report, "GLEU report JSON");
  score->add_option("--iterations", score_args.iterations, "Accepted and ignored");
  auto* seed_opt = score->add_option("--seed", seed_text, "Accepted and ignored");

  NormalizeArgs normalize_args;
  auto* normalize = app.add_subcommand("normalize", "Normalize a text file line by line");
  normalize->add_option("--in", normalize_args.in, "Input text file")->required();
  normalize->add_option("--out", normalize_args.out, "Output text file")->required();
  normalize->add_flag("--postprocess", normalize_args.postprocess,
                      "Also apply the hypothesis post-processor (needs --lang)");
  normalize->add_option("--prompt-prefix", normalize_args.prompt_prefix,
                        "Prompt echo to strip when post-processing");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth-prompt", "Render a correction prompt from a distribution");
  synth->add_option("--dist", synth_args.dist, "Distribution JSON from analyze")->required();
  synth->add_option("--out", synth_args.out, "Prompt text file")->required();
  synth->add_option("--spec", synth_args.spec, "Optional structured prompt JSON");

  AuditArgs audit_args;
  std::string cap_text;
  auto* audit = app.add_subcommand("audit", "Audit model predictions against their inputs");
  audit->add_option("--in", audit_args.in, "Predictions CSV (Input sentence, Output sentence)");
  audit->add_option("--dual", audit_args.dual, "Two prediction CSVs to compare")->expected(2);
  auto* cap_opt = audit->add_option("--cap", cap_text, "Token edit-distance cap (default 5)");
  audit->add_option("--report", audit_args.report, "Audit report JSON")->required();

  std::vector<const char*> cargv;
  cargv.reserve(argv.size());
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << app.help();
    return 1;
  }

  try {
    RunConfig config;
    if (!common.config.empty()) config.apply(read_config_file(common.config));
    std::map<std::string, std::string> flags = common.given();
    if (max_n_opt->count() > 0) flags["max_n"] = max_n_text;
    if (cap_opt->count() > 0) flags["cap"] = cap_text;
    if (seed_opt->count() > 0) flags["seed"] = seed_text;
    config.apply(flags);

    if (*classify) return cmd_classify(config, classify_args);
    if (*analyze_cmd) return cmd_analyze(config, analyze_args);
    if (*score) return cmd_score(config, score_args, out, err);
    if (*normalize) return cmd_normalize(config, normalize_args);
    if (*synth) return cmd_synth_prompt(config, synth_args);
    if (*audit) return cmd_audit(config, audit_args);
    err << app.help();
    return 1;
  } catch (const InputError& e) {
    err << "gec-forge: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "gec-forge: internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gecforge::cli
