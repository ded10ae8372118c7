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

#ifndef PROSOMARK_CONFIG_H_
#define PROSOMARK_CONFIG_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prosomark/annotations.h"
#include "prosomark/emit.h"
#include "prosomark/ingest.h"
#include "prosomark/phrasing.h"
#include "prosomark/prosody.h"

namespace prosomark {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EmitMode { kMarkup, kTobi, kBoth, kGroups };

std::string_view ToString(EmitMode m);
std::optional<EmitMode> ParseEmitMode(std::string_view s);
std::string_view ToString(TitleMode m);
std::optional<TitleMode> ParseTitleMode(std::string_view s);

// Directory holding the shipped lexica.
std::string DefaultDataDir();

struct Config {
  std::size_t min_len = 2;
  std::size_t max_len = 12;
  std::size_t max_subj = 4;
  std::string relevance_rules;  // path
  std::string multiwords;
  std::string phonetic;
  std::string frozen;
  std::string affect;
  std::string quantifiers;
  std::string floating_quantifiers;
  std::string comm_verbs;
  TitleMode title_mode = TitleMode::kAuto;
  EmitMode emit_mode = EmitMode::kMarkup;
  bool pov_tracking = true;
  bool paragraph_final_bi4 = false;

  // Shipped lexica from `data_dir`.
  static Config Defaults(const std::string& data_dir = DefaultDataDir());

  // Flat `key = value` lines; '#' starts a comment. Relative paths are
  // resolved against `base_dir`. Throws ConfigError naming the line.
  void Apply(std::string_view text, const std::string& base_dir = "");
  void Set(const std::string& key, const std::string& value,
           const std::string& base_dir = "");

  // min_len <= max_len and every lexicon file readable.
  void Validate() const;
};

Config LoadConfig(const std::string& path, Config base = Config::Defaults());

// Lexica and settings for the prosody stage, loaded from `config` paths.
ProsodyConfig MakeProsodyConfig(const Config& config);
PhrasingConfig MakePhrasingConfig(const Config& config);

struct PipelineOutput {
  Document doc;
  AnnotationSet ann;
  std::vector<SentenceGroups> groups;
  ProsodicScript script;
  std::vector<std::string> diagnostics;

  std::string markup;
  std::string tobi;
  std::string groups_text;
};

// Ingest, annotate (sidecar or shallow analysis), phrase, plan and render.
// Throws ParseError / IntegrityError for bad input.
PipelineOutput RunPipeline(std::string_view text, const std::optional<std::string>& sidecar,
                           const Config& config);

// The text the configured emit mode asks for.
std::string SelectOutput(const PipelineOutput& out, EmitMode mode);

struct GoldenReport {
  bool match = true;
  std::size_t line = 0;    // 1-based, first divergence
  std::size_t column = 0;  // 1-based byte column
  std::string expected;    // the diverging lines
  std::string actual;
  std::vector<std::string> token_diff;  // "-token" / "+token" lines

  std::string Render() const;
};

// Byte comparison with a positional and token-level report.
GoldenReport GoldenCheck(std::string_view produced, std::string_view golden);

}  // namespace prosomark

#endif  // PROSOMARK_CONFIG_H_
