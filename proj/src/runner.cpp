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

#include "atomwg/runner.hpp"

#include <cstdlib>
#include <thread>

#include "scenario_util.hpp"

namespace awg {

namespace {

const char* extension(TableFormat f) { return f == TableFormat::csv ? ".csv" : ".json"; }

std::vector<std::filesystem::path> write_output(const ScenarioOutput& out, const RunOptions& opt,
                                                const std::string& stem) {
  std::error_code ec;
  std::filesystem::create_directories(opt.out_dir, ec);
  if (ec) throw Error(ErrorCategory::io, "cannot create " + opt.out_dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> paths;
  const auto main = opt.out_dir / (stem + extension(opt.format));
  out.table.write(main, opt.format);
  paths.push_back(main);
  for (const auto& [name, t] : out.extra) {
    const auto p = opt.out_dir / (stem + "." + name + extension(opt.format));
    t.write(p, opt.format);
    paths.push_back(p);
  }
  return paths;
}

}  // namespace

int default_threads() {
  if (const char* env = std::getenv("ATOMWG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

json apply_overrides(const json& cfg, const RunOptions& opt) {
  json c = cfg;
  if (opt.seed) {
    const json resolved = resolve_config(c);
    if (resolved.contains("evolution") && resolved["evolution"].contains("seed")) {
      c["evolution"]["seed"] = *opt.seed;
    }
  }
  return c;
}

std::vector<std::filesystem::path> run_to_files(const json& cfg, const RunOptions& opt) {
  const json c = apply_overrides(cfg, opt);
  RunContext ctx{opt.threads, opt.log};
  const ScenarioOutput out = run_scenario(c, ctx);
  const std::string stem = opt.stem.empty() ? get_string(c, "/scenario") : opt.stem;
  return write_output(out, opt, stem);
}

std::vector<json> expand_sweep(const json& cfg) {
  if (!cfg.contains("sweep")) throw Error(ErrorCategory::config, "/sweep: missing");
  const json& sw = cfg["sweep"];
  if (!sw.is_object() || sw.empty()) throw Error(ErrorCategory::config, "/sweep: expected a non-empty object");
  std::vector<std::pair<std::string, json>> axes;
  for (const auto& [ptr, values] : sw.items()) {
    if (ptr.empty() || ptr[0] != '/') throw Error(ErrorCategory::config, "/sweep: keys must be JSON pointers, got '" + ptr + "'");
    if (!values.is_array() || values.empty()) {
      throw Error(ErrorCategory::config, "/sweep/" + ptr.substr(1) + ": expected a non-empty array");
    }
    axes.emplace_back(ptr, values);
  }
  json base = cfg;
  base.erase("sweep");
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.second.size();
  std::vector<json> points;
  for (std::size_t i = 0; i < total; ++i) {
    json c = base;
    std::size_t rem = i;
    // last axis varies fastest
    for (std::size_t a = axes.size(); a-- > 0;) {
      const auto& vals = axes[a].second;
      c[json::json_pointer(axes[a].first)] = vals[rem % vals.size()];
      rem /= vals.size();
    }
    resolve_config(c);  // validate every point up front
    points.push_back(std::move(c));
  }
  return points;
}

std::vector<std::filesystem::path> sweep_to_files(const json& cfg, const RunOptions& opt) {
  const std::vector<json> points = expand_sweep(cfg);
  const std::string stem = opt.stem.empty() ? get_string(cfg, "/scenario") : opt.stem;
  const int n = static_cast<int>(points.size());
  const int workers = std::max(1, std::min(opt.threads, n));
  RunOptions inner = opt;
  inner.threads = std::max(1, opt.threads / workers);
  std::vector<std::vector<std::filesystem::path>> written(points.size());
  detail::parallel_for(n, workers, [&](int i) {
    RunOptions o = inner;
    o.stem = stem + "_" + std::to_string(i);
    written[static_cast<std::size_t>(i)] = run_to_files(points[static_cast<std::size_t>(i)], o);
  });

  ResultTable index;
  std::vector<std::string> names = {"point"};
  std::vector<std::string> ptrs;
  for (const auto& [ptr, v] : cfg["sweep"].items()) {
    ptrs.push_back(ptr);
    names.push_back(ptr);
  }
  index.set_columns(names);
  json files = json::array();
  for (int i = 0; i < n; ++i) {
    std::vector<double> row = {static_cast<double>(i)};
    for (const auto& p : ptrs) {
      const json& v = points[static_cast<std::size_t>(i)][json::json_pointer(p)];
      if (v.is_number()) {
        row.push_back(v.get<double>());
      } else {
        // non-numeric values are listed by their position in the sweep array
        const json& vals = cfg["sweep"][p];
        row.push_back(static_cast<double>(std::find(vals.begin(), vals.end(), v) - vals.begin()));
      }
    }
    index.add_row(row);
    json f = json::array();
    for (const auto& path : written[static_cast<std::size_t>(i)]) f.push_back(path.filename().string());
    files.push_back(f);
  }
  index.metadata()["sweep"] = cfg["sweep"];
  index.metadata()["files"] = files;
  index.metadata()["scenario"] = stem;
  index.metadata()["version"] = ATOMWG_VERSION;
  const auto ipath = opt.out_dir / (stem + "_index" + extension(opt.format));
  index.write(ipath, opt.format);
  std::vector<std::filesystem::path> all;
  for (auto& w : written) all.insert(all.end(), w.begin(), w.end());
  all.push_back(ipath);
  return all;
}

}  // namespace awg
