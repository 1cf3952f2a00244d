// Copyright 2026 The atomwg Authors
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

// atomwg command line: run, sweep, validate and list scenarios.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "atomwg/runner.hpp"

namespace {

int exit_code(awg::ErrorCategory c) {
  switch (c) {
    case awg::ErrorCategory::config: return 2;
    case awg::ErrorCategory::unknown_scenario: return 3;
    case awg::ErrorCategory::io: return 4;
    case awg::ErrorCategory::domain: return 5;
    case awg::ErrorCategory::singularity: return 6;
    case awg::ErrorCategory::out_of_band: return 7;
    case awg::ErrorCategory::numerical: return 8;
    case awg::ErrorCategory::size: return 9;
  }
  return 1;
}

void report(const std::string& category, const std::string& message) {
  std::cerr << nlohmann::json{{"error", {{"category", category}, {"message", message}}}}.dump() << "\n";
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw awg::Error(awg::ErrorCategory::io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prefixes pointer-style config errors ("/a/b: ...") with file:line.
awg::Error locate(const awg::Error& e, const std::string& path, const std::string& text) {
  const std::string msg = e.what();
  if (e.category() != awg::ErrorCategory::config || msg.empty() || msg[0] != '/') return e;
  const std::string ptr = msg.substr(0, msg.find(':'));
  const int line = awg::locate_pointer(text, ptr);
  if (line == 0) return awg::Error(e.category(), path + ": " + msg);
  return awg::Error(e.category(), path + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atomwg - atomic-array waveguide QED simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".", format = "csv";
  std::uint64_t seed = 0;
  int threads = awg::default_threads();
  bool quiet = false;

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "JSON config file")->required();
    sub->add_option("--seed", seed, "override /evolution/seed");
    sub->add_option("--threads", threads, "worker threads (default: ATOMWG_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out-dir", out_dir, "output directory");
    sub->add_option("--format", format, "table format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--quiet", quiet, "suppress progress messages");
  };
  CLI::App* run = app.add_subcommand("run", "run one scenario config");
  add_run_flags(run);
  CLI::App* sweep = app.add_subcommand("sweep", "run the cartesian grid in /sweep");
  add_run_flags(sweep);
  CLI::App* validate = app.add_subcommand("validate", "check a config without running it");
  validate->add_option("config", config_path, "JSON config file")->required();
  CLI::App* list = app.add_subcommand("list", "list registered scenarios");
  bool show_defaults = false;
  list->add_flag("--defaults", show_defaults, "print each scenario's default config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) {
      report("usage", e.what());
      return 64;
    }
    return app.exit(e);
  }

  std::string text;
  try {
    if (*list) {
      for (const auto& s : awg::scenario_registry()) {
        std::cout << s.name << "\t" << s.summary << "\n";
        if (show_defaults) std::cout << s.defaults.dump(2) << "\n";
      }
      return 0;
    }
    text = read_text(config_path);
    const awg::json cfg = awg::parse_config_text(text, config_path);
    if (*validate) {
      if (cfg.contains("sweep")) {
        const auto points = awg::expand_sweep(cfg);
        std::cout << "ok " << cfg["scenario"].get<std::string>() << " (" << points.size() << " sweep points)\n";
      } else {
        awg::resolve_config(cfg);
        std::cout << "ok " << cfg["scenario"].get<std::string>() << "\n";
      }
      return 0;
    }
    awg::RunOptions opt;
    opt.out_dir = out_dir;
    opt.format = awg::parse_table_format(format);
    opt.threads = threads;
    if (run->count("--seed") + sweep->count("--seed") > 0) opt.seed = seed;
    if (!quiet) opt.log = [](const std::string& m) { std::cerr << m << "\n"; };
    const auto paths = *run ? awg::run_to_files(cfg, opt) : awg::sweep_to_files(cfg, opt);
    for (const auto& p : paths) std::cout << p.string() << "\n";
    return 0;
  } catch (const awg::Error& e) {
    const awg::Error l = text.empty() ? e : locate(e, config_path, text);
    report(awg::to_string(l.category()), l.what());
    return exit_code(l.category());
  } catch (const std::exception& e) {
    report("internal", e.what());
    return 1;
  }
}
