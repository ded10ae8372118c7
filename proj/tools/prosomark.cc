// Copyright (c) 2026 The prosomark Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "prosomark/config.h"
#include "prosomark/lexicon.h"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kMismatch = 3;

// Writes `text` next to `path` and renames it into place.
void WriteAtomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prosomark: text to prosodically annotated speech markup"};
  std::string input;
  std::optional<std::string> sidecar_path;
  std::optional<std::string> config_path;
  std::optional<std::string> check_path;
  std::optional<std::string> out_path;
  std::optional<std::string> emit;
  std::optional<std::string> title;
  bool no_pov = false;

  app.add_option("input", input, "Plain-text input")->required()->check(CLI::ExistingFile);
  app.add_option("--sidecar", sidecar_path, "Clause annotation sidecar")->check(CLI::ExistingFile);
  app.add_option("--emit", emit, "Output kind")
      ->check(CLI::IsMember({"markup", "tobi", "both", "groups"}));
  app.add_option("--config", config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("--check", check_path, "Golden file to compare against")
      ->check(CLI::ExistingFile);
  app.add_option("--title", title, "Title detection")
      ->check(CLI::IsMember({"auto", "force", "off"}));
  app.add_option("--out", out_path, "Output path (default: stdout)");
  app.add_flag("--no-pov", no_pov, "Disable point-of-view tracking");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  prosomark::Config config;
  try {
    config = prosomark::Config::Defaults();
    if (config_path) config = prosomark::LoadConfig(*config_path, config);
    if (emit) config.Set("emit_mode", *emit);
    if (title) config.Set("title_mode", *title);
    if (no_pov) config.pov_tracking = false;
    config.Validate();
  } catch (const std::exception& e) {
    std::cerr << "prosomark: " << e.what() << "\n";
    return kUsage;
  }

  std::string produced;
  try {
    const std::string text = prosomark::ReadFile(input);
    std::optional<std::string> sidecar;
    if (sidecar_path) sidecar = prosomark::ReadFile(*sidecar_path);
    const prosomark::PipelineOutput out = prosomark::RunPipeline(text, sidecar, config);
    for (const auto& d : out.diagnostics) std::cerr << d << "\n";
    produced = prosomark::SelectOutput(out, config.emit_mode);
  } catch (const std::exception& e) {
    std::cerr << "prosomark: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (out_path) {
      WriteAtomically(*out_path, produced);
    } else if (!check_path) {
      std::cout << produced;
    }
    if (check_path) {
      const auto report = prosomark::GoldenCheck(produced, prosomark::ReadFile(*check_path));
      if (!report.match) {
        std::cerr << report.Render();
        return kMismatch;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "prosomark: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
